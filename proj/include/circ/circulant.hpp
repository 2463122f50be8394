#ifndef CIRC_CIRCULANT_HPP
#define CIRC_CIRCULANT_HPP

#include <vector>

#include "circ/bits.hpp"

namespace circ {

/**
 * Circular distance |k|_n = min(k mod n, n - k mod n).
 *
 * Throws std::invalid_argument when n < 1.
 */
int circ_distance(long long k, int n);

/**
 * The circulant graph C_n(S) on Z_n: {i, j} is an edge iff |j - i|_n is in S.
 *
 * The connection set is stored canonically as a sorted, duplicate-free list of
 * representatives in {1, ..., floor(n/2)}. Instances are immutable.
 */
class CirculantGraph {
public:
    /// Strict constructor: every element of `conn` must already lie in [1, floor(n/2)].
    CirculantGraph(int n, std::vector<int> conn);

    /// Reduces arbitrary integers through circ_distance first; zero distances are rejected.
    static CirculantGraph from_any(int n, const std::vector<long long>& elems);

    int n() const { return n_; }
    const std::vector<int>& conn() const { return conn_; }

    /// Neighbourhood of v as a bitset.
    VertexSet neighbors(int v) const { return adj_[v]; }
    const std::vector<VertexSet>& adjacency() const { return adj_; }

    bool adjacent(int i, int j) const { return contains(adj_[i], j); }
    int degree(int v) const { return popcount(adj_[v]); }
    std::size_t edge_count() const;

    VertexSet all_vertices() const { return low_mask(n_); }

    bool operator==(const CirculantGraph& other) const {
        return n_ == other.n_ && conn_ == other.conn_;
    }

private:
    int n_;
    std::vector<int> conn_;
    std::vector<VertexSet> adj_;
};

/// Same as the CirculantGraph constructor; kept as a free function for symmetry with the other builders.
CirculantGraph build(int n, std::vector<int> conn);

/// {1, ..., floor(n/2)} minus conn(g).
std::vector<int> complement_set(const CirculantGraph& g);

/// The graph complement, itself circulant on the complementary connection set.
CirculantGraph complement(const CirculantGraph& g);

/// Builds C_n(S) from the complementary set S̄ instead of S.
CirculantGraph from_complement(int n, const std::vector<int>& sbar);

/// The removed set {1, 2, 4, ..., 2^m, 2^m - 1} of the family with n = 3 * 2^m.
std::vector<int> family_sbar(int m);

/**
 * The graph C_n(S) with n = 3 * 2^m and S the complement of
 * {1, 2, 4, ..., 2^m, 2^m - 1}. Requires 3 <= m <= 4 (n must fit 64 vertices).
 */
CirculantGraph family_graph(int m);

/// Connectivity of the subgraph induced on `alive` (the empty and single-vertex graphs count as connected).
bool is_connected_on(const std::vector<VertexSet>& adj, VertexSet alive);

bool is_connected(const CirculantGraph& g);

/**
 * l-connectivity by exhaustive removal: true iff deleting any set of fewer
 * than l vertices leaves a connected induced subgraph.
 */
bool is_l_connected(const CirculantGraph& g, int l);

/**
 * Vertex connectivity computed with unit-capacity max-flow on the split-vertex
 * network (Menger). Complete graphs report n - 1.
 */
int vertex_connectivity(const CirculantGraph& g);

}  // namespace circ

#endif  // CIRC_CIRCULANT_HPP
