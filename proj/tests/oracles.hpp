// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's enumeration, elimination or search code.
#ifndef CIRC_TESTS_ORACLES_HPP
#define CIRC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Set = std::uint64_t;
using Rational = boost::multiprecision::cpp_rational;

inline int dist(int k, int n) {
    int r = ((k % n) + n) % n;
    return std::min(r, n - r);
}

inline bool in(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline int size(Set s) { return __builtin_popcountll(s); }

/// Every independent set of C_n(S), by checking all 2^n vertex subsets.
inline std::vector<Set> independent_sets(int n, const std::vector<int>& conn) {
    std::vector<Set> out;
    for (Set s = 0; s < (Set{1} << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!((s >> i) & 1)) continue;
            for (int j = i + 1; j < n && ok; ++j) {
                if (((s >> j) & 1) && in(conn, dist(j - i, n))) ok = false;
            }
        }
        if (ok) out.push_back(s);
    }
    return out;
}

/// Maximal elements of a down-closed family given as its full face list.
inline std::vector<Set> maximal(const std::vector<Set>& all) {
    std::set<Set> faces(all.begin(), all.end());
    std::vector<Set> out;
    for (Set f : all) {
        bool max = true;
        for (Set g : all) {
            if (g != f && (f & ~g) == 0) {
                max = false;
                break;
            }
        }
        if (max) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every face of the complex generated by `facets` (with duplicates removed).
inline std::vector<Set> closure(const std::vector<Set>& facets) {
    std::set<Set> faces;
    for (Set f : facets) {
        for (Set sub = f;; sub = (sub - 1) & f) {
            faces.insert(sub);
            if (sub == 0) break;
        }
    }
    return {faces.begin(), faces.end()};
}

inline std::vector<long long> f_vector(const std::vector<Set>& faces) {
    int top = 0;
    for (Set f : faces) top = std::max(top, size(f));
    std::vector<long long> f(top + 1, 0);
    for (Set s : faces) ++f[size(s)];
    return f;
}

inline std::vector<Set> link(const std::vector<Set>& faces, Set face) {
    std::set<Set> all(faces.begin(), faces.end());
    std::vector<Set> out;
    for (Set g : faces) {
        if ((g & face) == 0 && all.count(g | face)) out.push_back(g);
    }
    return out;
}

/// Rank of an integer matrix by Gaussian elimination over Q with exact rationals.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Reduced Betti numbers b_{-1}..b_{d-1} over Q from a full face list (must contain the empty face).
inline std::vector<long long> reduced_betti(const std::vector<Set>& faces) {
    if (faces.empty()) return {};
    int top = 0;
    for (Set f : faces) top = std::max(top, size(f));
    std::vector<std::vector<Set>> by(top + 1);
    for (Set f : faces) by[size(f)].push_back(f);
    for (auto& l : by) std::sort(l.begin(), l.end());
    // rank[k] = rank of the map from k-element faces to (k-1)-element faces.
    std::vector<std::size_t> rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        std::vector<std::vector<Rational>> m(by[k - 1].size(), std::vector<Rational>(by[k].size(), 0));
        for (std::size_t j = 0; j < by[k].size(); ++j) {
            int pos = 0;
            for (int v = 0; v < 64; ++v) {
                if (!((by[k][j] >> v) & 1)) continue;
                Set facet = by[k][j] & ~(Set{1} << v);
                auto it = std::find(by[k - 1].begin(), by[k - 1].end(), facet);
                m[it - by[k - 1].begin()][j] = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        rank[k] = rational_rank(std::move(m));
    }
    std::vector<long long> b(top + 1);
    for (int k = 0; k <= top; ++k) {
        b[k] = static_cast<long long>(by[k].size()) - static_cast<long long>(rank[k]) -
               static_cast<long long>(k + 1 <= top ? rank[k + 1] : 0);
    }
    return b;
}

/// Reisner's condition checked face by face with the brute-force homology above.
inline bool reisner(const std::vector<Set>& faces, bool include_empty_face) {
    for (Set f : faces) {
        if (f == 0 && !include_empty_face) continue;
        auto lk = link(faces, f);
        auto b = reduced_betti(lk);
        const int link_dim = static_cast<int>(b.size()) - 2;
        for (int i = -1; i < link_dim; ++i) {
            if (b[i + 1] != 0) return false;
        }
    }
    return true;
}

/// Connectivity of the graph on `alive` whose edges are circular distances in conn.
inline bool circulant_connected_after_removal(int n, const std::vector<int>& conn, Set removed) {
    std::vector<int> alive;
    for (int v = 0; v < n; ++v) {
        if (!((removed >> v) & 1)) alive.push_back(v);
    }
    if (alive.size() <= 1) return true;
    std::vector<int> comp(n, -1);
    std::vector<int> stack{alive[0]};
    comp[alive[0]] = 0;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : alive) {
            if (comp[w] < 0 && in(conn, dist(w - u, n))) {
                comp[w] = 0;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == alive.size();
}

/// Connected components of the 1-skeleton of a face list.
inline int components(const std::vector<Set>& faces) {
    Set verts = 0;
    for (Set f : faces) verts |= f;
    std::vector<int> parent(64);
    for (int i = 0; i < 64; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Set f : faces) {
        if (size(f) != 2) continue;
        int a = __builtin_ctzll(f);
        int b = 63 - __builtin_clzll(f);
        parent[find(a)] = find(b);
    }
    std::set<int> roots;
    for (int v = 0; v < 64; ++v) {
        if ((verts >> v) & 1) roots.insert(find(v));
    }
    return static_cast<int>(roots.size());
}

}  // namespace oracle

#endif  // CIRC_TESTS_ORACLES_HPP
