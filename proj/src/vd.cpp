#include "circ/vd.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "circ/deadline.hpp"

namespace circ {

namespace {

struct FacetKeyHash {
    std::size_t operator()(const std::vector<VertexSet>& key) const {
        std::size_t h = key.size();
        for (VertexSet f : key) h ^= std::hash<VertexSet>{}(f) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

constexpr int kNotVd = -2;
constexpr int kBaseCase = -1;

// Memo value: kNotVd, kBaseCase, or the shedding vertex that worked.
class VdSearch {
public:
    int solve(const SimplicialComplex& c) {
        if (auto it = memo_.find(c.facets()); it != memo_.end()) return it->second;
        check_deadline();
        int code = kNotVd;
        if (c.facet_count() == 1) {
            code = kBaseCase;
        } else if (!c.is_void()) {
            for (int x : to_vertices(c.vertex_set())) {
                SimplicialComplex del = deletion(c, x);
                if (!facets_survive(del, c)) continue;
                if (solve(link(c, bit(x))) == kNotVd) continue;
                if (solve(del) == kNotVd) continue;
                code = x;
                break;
            }
        }
        memo_.emplace(c.facets(), code);
        return code;
    }

private:
    static bool facets_survive(const SimplicialComplex& del, const SimplicialComplex& c) {
        const auto& big = c.facets();
        return std::all_of(del.facets().begin(), del.facets().end(),
                           [&](VertexSet f) { return std::binary_search(big.begin(), big.end(), f); });
    }

    std::unordered_map<std::vector<VertexSet>, int, FacetKeyHash> memo_;
};

void require_pure(const SimplicialComplex& c) {
    if (!c.is_pure()) throw std::invalid_argument("vertex decomposability is only defined here for pure complexes");
}

void require_pure_2dim_connected(const SimplicialComplex& c, const char* who) {
    if (c.dim() != 2 || !c.is_pure() || !is_connected(c))
        throw std::invalid_argument(std::string(who) + ": complex must be pure, 2-dimensional and connected");
}

StepLink summarize(int v, const SimplicialComplex& lk) {
    StepLink s;
    s.vertex = v;
    s.link_vertices = lk.vertex_count();
    s.link_edges = edge_count(lk);
    s.link_dim = lk.dim();
    s.connected = is_connected(lk);
    return s;
}

}  // namespace

SheddingCertificate SheddingOutcome::certificate(const std::vector<int>& order) const {
    if (!ok()) throw std::logic_error("no certificate: the shedding walk failed");
    return SheddingCertificate{order, steps, terminal};
}

bool is_vd_recursive(const SimplicialComplex& c) {
    require_pure(c);
    return VdSearch{}.solve(c) != kNotVd;
}

std::optional<SheddingChain> vd_decomposition(const SimplicialComplex& c) {
    require_pure(c);
    VdSearch search;
    int code = search.solve(c);
    if (code == kNotVd) return std::nullopt;
    SheddingChain chain;
    SimplicialComplex cur = c;
    while (code >= 0) {
        chain.order.push_back(code);
        cur = deletion(cur, code);
        code = search.solve(cur);
    }
    chain.terminal = cur.facets().front();
    return chain;
}

SheddingOutcome verify_shedding_sequence(const SimplicialComplex& c, const std::vector<int>& order) {
    require_pure_2dim_connected(c, "verify_shedding_sequence");
    const int n = c.vertex_count();
    if (static_cast<int>(order.size()) != n - 3)
        throw std::invalid_argument("verify_shedding_sequence: order must list n - 3 = " + std::to_string(n - 3) +
                                    " vertices, got " + std::to_string(order.size()));
    VertexSet used = 0;
    for (int v : order) {
        if (v < 0 || v >= c.n_vertices() || !contains(c.vertex_set(), v))
            throw std::invalid_argument("verify_shedding_sequence: " + std::to_string(v) + " is not a vertex");
        if (contains(used, v)) throw std::invalid_argument("verify_shedding_sequence: repeated vertex " + std::to_string(v));
        used |= bit(v);
    }

    SheddingOutcome out;
    SimplicialComplex cur = c;
    for (std::size_t i = 0; i < order.size(); ++i) {
        check_deadline();
        const int v = order[i];
        SimplicialComplex lk = link(cur, bit(v));
        StepLink step = summarize(v, lk);
        cur = deletion(cur, v);
        step.remaining_pure = cur.is_pure();
        out.steps.push_back(step);
        if (step.link_dim != 1 || !step.connected) {
            out.failed_step = i;
            out.reason = "link of " + std::to_string(v) + " is " +
                         (step.link_dim != 1 ? "not 1-dimensional" : "disconnected");
            out.terminal = cur.vertex_set();
            return out;
        }
    }
    out.terminal = cur.vertex_set();
    if (cur.facet_count() != 1 || popcount(cur.facets().front()) != 3) {
        out.failed_step = order.size();
        out.reason = "remaining complex is not a single triangle";
    }
    return out;
}

std::vector<int> theorem1_sequence(int m) {
    if (m < 3) throw std::invalid_argument("theorem1_sequence: m must be >= 3");
    const int n = 3 * (1 << m);
    std::vector<int> seq;
    seq.reserve(n - 3);
    for (int v = 1; v < n; ++v) {
        if (v != (1 << m) && v != (1 << (m + 1))) seq.push_back(v);
    }
    return seq;
}

std::optional<std::vector<int>> find_shedding_sequence(const SimplicialComplex& c) {
    require_pure_2dim_connected(c, "find_shedding_sequence");
    std::unordered_set<VertexSet> dead;
    std::vector<int> order;

    auto dfs = [&](auto&& self, const SimplicialComplex& cur) -> bool {
        const VertexSet remaining = cur.vertex_set();
        if (popcount(remaining) == 3) return cur.facet_count() == 1 && popcount(cur.facets().front()) == 3;
        if (dead.count(remaining)) return false;
        check_deadline();
        for (int v : to_vertices(remaining)) {
            SimplicialComplex lk = link(cur, bit(v));
            if (lk.dim() != 1 || !is_connected(lk)) continue;
            order.push_back(v);
            if (self(self, deletion(cur, v))) return true;
            order.pop_back();
        }
        dead.insert(remaining);
        return false;
    };
    if (!dfs(dfs, c)) return std::nullopt;
    return order;
}

}  // namespace circ
