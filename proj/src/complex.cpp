#include "circ/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace circ {

namespace {

void check_range(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("simplicial complex: vertex count must lie in [0, 64], got " +
                                    std::to_string(n));
}

bool in_sbar(const std::vector<bool>& member, int n, long long k) {
    return member[circ_distance(k, n)];
}

std::vector<bool> sbar_membership(int n, const std::vector<int>& sbar) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<bool> member(n / 2 + 1, false);
    for (int s : sbar) {
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("complement set element " + std::to_string(s) + " outside [1, " +
                                        std::to_string(n / 2) + "]");
        member[s] = true;
    }
    return member;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<VertexSet> maximalize(std::vector<VertexSet> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::stable_sort(faces.begin(), faces.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) > popcount(b); });
    std::vector<VertexSet> kept;
    for (VertexSet f : faces) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [f](VertexSet k) { return is_subset(f, k); });
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<VertexSet> facets, Trusted)
    : n_(n_vertices), facets_(std::move(facets)) {
    for (VertexSet f : facets_) vertices_ |= f;
}

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<VertexSet> facets)
    : n_(n_vertices), facets_(std::move(facets)) {
    check_range(n_);
    std::sort(facets_.begin(), facets_.end());
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (!is_subset(facets_[i], low_mask(n_)))
            throw std::invalid_argument("simplicial complex: facet uses a vertex outside [0, n)");
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            if (i != j && is_subset(facets_[i], facets_[j]))
                throw std::invalid_argument("simplicial complex: facet list is not an antichain");
        }
        vertices_ |= facets_[i];
    }
}

SimplicialComplex SimplicialComplex::from_faces(int n_vertices, std::vector<VertexSet> faces) {
    check_range(n_vertices);
    for (VertexSet f : faces) {
        if (!is_subset(f, low_mask(n_vertices)))
            throw std::invalid_argument("simplicial complex: face uses a vertex outside [0, n)");
    }
    return SimplicialComplex(n_vertices, maximalize(std::move(faces)), Trusted{});
}

SimplicialComplex SimplicialComplex::void_complex(int n_vertices) {
    check_range(n_vertices);
    return SimplicialComplex(n_vertices, {}, Trusted{});
}

SimplicialComplex SimplicialComplex::empty_face_complex(int n_vertices) {
    check_range(n_vertices);
    return SimplicialComplex(n_vertices, {VertexSet{0}}, Trusted{});
}

SimplicialComplex SimplicialComplex::simplex(int n_vertices, VertexSet face) {
    return from_faces(n_vertices, {face});
}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    int best = 0;
    for (VertexSet f : facets_) best = std::max(best, popcount(f));
    return best - 1;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    const int k = popcount(facets_.front());
    return std::all_of(facets_.begin(), facets_.end(), [k](VertexSet f) { return popcount(f) == k; });
}

bool SimplicialComplex::has_face(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return is_subset(face, f); });
}

VertexSet SimplicialComplex::cone_points() const {
    if (facets_.empty()) return 0;
    VertexSet common = ~VertexSet{0};
    for (VertexSet f : facets_) common &= f;
    return common;
}

std::vector<VertexSet> maximal_cliques(const std::vector<VertexSet>& adj) {
    std::vector<VertexSet> out;
    const int n = static_cast<int>(adj.size());
    if (n == 0) return out;

    auto recurse = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (p == 0) {
            if (x == 0) out.push_back(r);
            return;
        }
        // Tomita pivot: maximise |P ∩ N(u)| over u in P ∪ X.
        int pivot = -1;
        int best = -1;
        for (VertexSet cand = p | x; cand; cand &= cand - 1) {
            int u = lowest(cand);
            int score = popcount(p & adj[u]);
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
        for (VertexSet todo = p & ~adj[pivot]; todo; todo &= todo - 1) {
            int v = lowest(todo);
            self(self, r | bit(v), p & adj[v], x & adj[v]);
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    recurse(recurse, 0, low_mask(n), 0);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex clique_complex(const std::vector<VertexSet>& adj) {
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        if (contains(adj[v], v)) throw std::invalid_argument("clique_complex: loops are not allowed");
    }
    if (n == 0) return SimplicialComplex::empty_face_complex(0);
    return SimplicialComplex(n, maximal_cliques(adj));
}

SimplicialComplex independence_complex(const CirculantGraph& g) {
    return clique_complex(complement(g).adjacency());
}

std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c) {
    if (c.is_void()) return {};
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : c.facets()) for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
    std::vector<std::vector<VertexSet>> out(c.dim() + 2);
    for (VertexSet s : seen) out[popcount(s)].push_back(s);
    for (auto& layer : out) std::sort(layer.begin(), layer.end());
    return out;
}

std::vector<VertexSet> faces(const SimplicialComplex& c, int k) {
    if (c.is_void() || k < -1 || k > c.dim()) return {};
    if (k == -1) return {VertexSet{0}};
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : c.facets()) {
        if (popcount(f) <= k) continue;
        for_each_subset(f, [&](VertexSet s) {
            if (popcount(s) == k + 1) seen.insert(s);
        });
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> h_from_f(const std::vector<long long>& f) {
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long sum = 0;
        for (int i = 0; i <= k; ++i) {
            long long term = binomial(d - i, k - i) * f[i];
            sum += ((k - i) % 2 == 0) ? term : -term;
        }
        h[k] = sum;
    }
    return h;
}

FHProfile fh_profile(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("fh_profile: the void complex has no f-vector");
    FHProfile p;
    for (const auto& layer : faces_by_dimension(c)) p.f.push_back(static_cast<long long>(layer.size()));
    p.h = h_from_f(p.f);
    for (std::size_t i = 0; i < p.f.size(); ++i) {
        // f[i] counts faces of dimension i - 1.
        p.chi += (i % 2 == 1) ? p.f[i] : -p.f[i];
    }
    const int d = p.d();
    const long long signed_hd = ((d - 1) % 2 == 0) ? p.h[d] : -p.h[d];
    if (signed_hd != p.chi) throw std::logic_error("fh_profile: h_d disagrees with the Euler characteristic");
    return p;
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet face) {
    std::vector<VertexSet> rest;
    for (VertexSet f : c.facets()) {
        if (is_subset(face, f)) rest.push_back(f & ~face);
    }
    if (rest.empty()) throw std::invalid_argument("link: the given vertex set is not a face of the complex");
    return SimplicialComplex::from_faces(c.n_vertices(), std::move(rest));
}

SimplicialComplex deletion(const SimplicialComplex& c, int v) {
    if (v < 0 || v >= c.n_vertices()) throw std::invalid_argument("deletion: vertex out of range");
    if (!contains(c.vertex_set(), v)) return c;
    return restriction(c, ~bit(v) & low_mask(c.n_vertices()));
}

SimplicialComplex restriction(const SimplicialComplex& c, VertexSet sigma) {
    if (c.is_void()) return c;
    std::vector<VertexSet> kept;
    kept.reserve(c.facet_count());
    for (VertexSet f : c.facets()) kept.push_back(f & sigma);
    return SimplicialComplex::from_faces(c.n_vertices(), std::move(kept));
}

std::vector<VertexSet> one_skeleton(const SimplicialComplex& c) {
    std::vector<VertexSet> adj(c.n_vertices(), 0);
    for (VertexSet f : c.facets()) {
        for (VertexSet rest = f; rest; rest &= rest - 1) adj[lowest(rest)] |= f & ~bit(lowest(rest));
    }
    return adj;
}

int component_count(const SimplicialComplex& c) {
    const auto adj = one_skeleton(c);
    VertexSet left = c.vertex_set();
    int count = 0;
    while (left) {
        VertexSet seen = bit(lowest(left));
        VertexSet frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        left &= ~seen;
        ++count;
    }
    return count;
}

bool is_connected(const SimplicialComplex& c) { return component_count(c) == 1; }

std::size_t edge_count(const SimplicialComplex& c) {
    std::size_t twice = 0;
    for (VertexSet a : one_skeleton(c)) twice += popcount(a);
    return twice / 2;
}

bool check_pure2_criterion(int n, const std::vector<int>& sbar) {
    if (sbar.empty()) throw std::invalid_argument("check_pure2_criterion: S̄ is empty (complete graph)");
    const auto member = sbar_membership(n, sbar);
    for (int a = 1; a < n; ++a) {
        if (!in_sbar(member, n, a)) continue;
        // Common neighbours of 0 and a in the complement graph.
        std::vector<int> common;
        for (int b = 1; b < n; ++b) {
            if (b != a && in_sbar(member, n, b) && in_sbar(member, n, b - a)) common.push_back(b);
        }
        if (common.empty()) return false;
        for (std::size_t i = 0; i < common.size(); ++i) {
            for (std::size_t j = i + 1; j < common.size(); ++j) {
                if (in_sbar(member, n, common[i] - common[j])) return false;
            }
        }
    }
    return true;
}

OrbitSplit facet_orbit_split(int n, const std::vector<int>& sbar) {
    if (!check_pure2_criterion(n, sbar))
        throw std::invalid_argument("facet_orbit_split: Δ is not pure of dimension 2");
    if (n > kMaxVertices) throw std::invalid_argument("facet_orbit_split: n exceeds 64");
    const auto member = sbar_membership(n, sbar);
    OrbitSplit split;
    for (int a = 1; a < n; ++a) {
        if (!in_sbar(member, n, a)) continue;
        for (int b = a + 1; b < n; ++b) {
            if (!in_sbar(member, n, b) || !in_sbar(member, n, b - a)) continue;
            const VertexSet tri = bit(0) | bit(a) | bit(b);
            const int da = circ_distance(a, n);
            if (da == circ_distance(b, n) && da == circ_distance(b - a, n))
                split.te.push_back(tri);
            else
                split.t.push_back(tri);
        }
    }
    if (split.t.size() % 3 != 0) throw std::logic_error("facet_orbit_split: |T| is not a multiple of 3");
    if (split.te.size() > 1) throw std::logic_error("facet_orbit_split: more than one equilateral triangle");
    return split;
}

long long h3_formula(int n, const std::vector<int>& sbar, long long t, bool has_te) {
    const auto member = sbar_membership(n, sbar);
    const long long s = std::count(member.begin(), member.end(), true);
    long long h3 = -1 + static_cast<long long>(n) * (t - s + 1);
    if (has_te) {
        if (n % 3 != 0 || !member[n / 3])
            throw std::invalid_argument("h3_formula: equilateral branch needs n = 3k with k in S̄");
        h3 += n / 3;
    }
    return h3;
}

}  // namespace circ
