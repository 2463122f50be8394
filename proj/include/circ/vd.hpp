#ifndef CIRC_VD_HPP
#define CIRC_VD_HPP

#include <optional>
#include <string>
#include <vector>

#include "circ/complex.hpp"

namespace circ {

/// Summary of link_{Δ_{i-1}}(v_i) at one step of a shedding walk.
struct StepLink {
    int vertex = -1;
    int link_vertices = 0;
    std::size_t link_edges = 0;
    int link_dim = -2;
    bool connected = false;
    bool remaining_pure = true;  ///< purity of Δ_i after the deletion (recorded, never enforced)

    bool operator==(const StepLink&) const = default;
};

/**
 * Certificate that a pure 2-dimensional complex is vertex decomposable:
 * deleting `order` one vertex at a time keeps every link connected and
 * 1-dimensional and leaves the triangle `terminal`.
 */
struct SheddingCertificate {
    std::vector<int> order;
    std::vector<StepLink> step_links;
    VertexSet terminal = 0;

    bool operator==(const SheddingCertificate&) const = default;
};

/// Result of walking a proposed shedding order.
struct SheddingOutcome {
    std::vector<StepLink> steps;            ///< one entry per step actually taken
    std::optional<std::size_t> failed_step; ///< 0-based index of the first violating step, or steps.size() if only the terminal check failed
    std::string reason;                     ///< empty on success
    VertexSet terminal = 0;                 ///< remaining vertex set at the end of the walk

    bool ok() const { return !failed_step.has_value(); }
    SheddingCertificate certificate(const std::vector<int>& order) const;
};

/**
 * Recursive vertex-decomposability test for pure complexes: c is {∅}, a
 * single simplex, or has a vertex x such that link(x) and del(x) are vertex
 * decomposable and every facet of del(x) is a facet of c. Throws
 * std::invalid_argument on a non-pure input.
 */
bool is_vd_recursive(const SimplicialComplex& c);

/// A chain of shedding vertices and the simplex it ends at.
struct SheddingChain {
    std::vector<int> order;
    VertexSet terminal = 0;
};

/**
 * Like is_vd_recursive, but on success also returns the successive shedding
 * vertices chosen along the deletion branch and the final simplex.
 */
std::optional<SheddingChain> vd_decomposition(const SimplicialComplex& c);

/**
 * Walks Δ_0 = c, Δ_i = del_{Δ_{i-1}}(v_i), checking that each link is a
 * connected 1-dimensional complex and that Δ_{n-3} is a single triangle.
 * Throws std::invalid_argument if c is not pure 2-dimensional and connected,
 * or if `order` is not n - 3 distinct vertices of c.
 */
SheddingOutcome verify_shedding_sequence(const SimplicialComplex& c, const std::vector<int>& order);

/// 1, ..., n-1 with 2^m and 2^{m+1} omitted, n = 3 * 2^m. Throws for m < 3.
std::vector<int> theorem1_sequence(int m);

/**
 * Depth-first search (ascending vertex labels) for an order satisfying the
 * walk conditions; failed intermediate vertex sets are memoised. Throws
 * std::invalid_argument if c is not pure 2-dimensional and connected.
 */
std::optional<std::vector<int>> find_shedding_sequence(const SimplicialComplex& c);

}  // namespace circ

#endif  // CIRC_VD_HPP
