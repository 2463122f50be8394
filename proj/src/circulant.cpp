#include "circ/circulant.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace circ {

int circ_distance(long long k, int n) {
    if (n < 1) throw std::invalid_argument("circ_distance: n must be >= 1");
    long long r = k % n;
    if (r < 0) r += n;
    return static_cast<int>(std::min(r, n - r));
}

CirculantGraph::CirculantGraph(int n, std::vector<int> conn) : n_(n), conn_(std::move(conn)) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("circulant graph: n must lie in [1, 64], got " + std::to_string(n));
    for (int s : conn_) {
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("circulant graph: connection element " + std::to_string(s) +
                                        " outside [1, " + std::to_string(n / 2) + "]");
    }
    std::sort(conn_.begin(), conn_.end());
    conn_.erase(std::unique(conn_.begin(), conn_.end()), conn_.end());

    adj_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
        for (int s : conn_) {
            adj_[i] |= bit((i + s) % n_);
            adj_[i] |= bit(((i - s) % n_ + n_) % n_);
        }
    }
}

CirculantGraph CirculantGraph::from_any(int n, const std::vector<long long>& elems) {
    std::vector<int> conn;
    conn.reserve(elems.size());
    for (long long e : elems) {
        int d = circ_distance(e, n);
        if (d == 0)
            throw std::invalid_argument("circulant graph: element " + std::to_string(e) +
                                        " is 0 mod " + std::to_string(n));
        conn.push_back(d);
    }
    return CirculantGraph(n, std::move(conn));
}

std::size_t CirculantGraph::edge_count() const {
    std::size_t twice = 0;
    for (VertexSet a : adj_) twice += popcount(a);
    return twice / 2;
}

CirculantGraph build(int n, std::vector<int> conn) { return CirculantGraph(n, std::move(conn)); }

std::vector<int> complement_set(const CirculantGraph& g) {
    std::vector<int> out;
    for (int s = 1; s <= g.n() / 2; ++s) {
        if (!std::binary_search(g.conn().begin(), g.conn().end(), s)) out.push_back(s);
    }
    return out;
}

CirculantGraph complement(const CirculantGraph& g) { return CirculantGraph(g.n(), complement_set(g)); }

CirculantGraph from_complement(int n, const std::vector<int>& sbar) {
    return complement(CirculantGraph(n, sbar));
}

std::vector<int> family_sbar(int m) {
    if (m < 3) throw std::invalid_argument("family: m must be >= 3");
    std::vector<int> sbar;
    for (int i = 0; i <= m; ++i) sbar.push_back(1 << i);
    sbar.push_back((1 << m) - 1);
    std::sort(sbar.begin(), sbar.end());
    return sbar;
}

CirculantGraph family_graph(int m) {
    if (m < 3) throw std::invalid_argument("family_graph: m must be >= 3, got " + std::to_string(m));
    if (m > 4) throw std::invalid_argument("family_graph: n = 3 * 2^m exceeds 64 vertices for m > 4");
    return from_complement(3 * (1 << m), family_sbar(m));
}

bool is_connected_on(const std::vector<VertexSet>& adj, VertexSet alive) {
    if (popcount(alive) <= 1) return true;
    VertexSet seen = bit(lowest(alive));
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
        next &= alive & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

bool is_connected(const CirculantGraph& g) { return is_connected_on(g.adjacency(), g.all_vertices()); }

namespace {

// Visits every subset of {0..n-1} of size exactly k; stops early if fn returns false.
template <typename Fn>
bool all_k_subsets(int n, int k, Fn&& fn) {
    if (k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s = 0;
        for (int i : idx) s |= bit(i);
        if (!fn(s)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Maximum number of internally vertex-disjoint s-t paths, s and t non-adjacent.
int local_connectivity(const CirculantGraph& g, int s, int t) {
    const int n = g.n();
    // Node v_in = 2v, v_out = 2v + 1; internal arcs capacity 1, graph arcs capacity "infinite" (n).
    const int nodes = 2 * n;
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (int v = 0; v < n; ++v) {
        cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
        for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) cap[2 * v + 1][2 * lowest(nb)] = n;
    }
    const int src = 2 * s + 1;
    const int dst = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> parent(nodes, -1);
        parent[src] = src;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && parent[dst] < 0) {
            int u = q.front();
            q.pop();
            for (int w = 0; w < nodes; ++w) {
                if (parent[w] < 0 && cap[u][w] > 0) {
                    parent[w] = u;
                    q.push(w);
                }
            }
        }
        if (parent[dst] < 0) return flow;
        for (int w = dst; w != src; w = parent[w]) {
            --cap[parent[w]][w];
            ++cap[w][parent[w]];
        }
        ++flow;
    }
}

}  // namespace

bool is_l_connected(const CirculantGraph& g, int l) {
    if (l < 1) throw std::invalid_argument("is_l_connected: l must be >= 1");
    const VertexSet all = g.all_vertices();
    for (int k = 0; k < l && k <= g.n(); ++k) {
        bool ok = all_k_subsets(g.n(), k, [&](VertexSet removed) {
            return is_connected_on(g.adjacency(), all & ~removed);
        });
        if (!ok) return false;
    }
    return true;
}

int vertex_connectivity(const CirculantGraph& g) {
    const int n = g.n();
    int best = n - 1;
    if (!is_connected(g)) return 0;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            best = std::min(best, local_connectivity(g, s, t));
        }
    }
    return best;
}

}  // namespace circ
