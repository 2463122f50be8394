#ifndef CIRC_COMPLEX_HPP
#define CIRC_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "circ/bits.hpp"
#include "circ/circulant.hpp"

namespace circ {

/**
 * A finite simplicial complex on the ambient vertex set {0, ..., n-1}, stored
 * by its facets (maximal faces) as vertex bitsets.
 *
 * Two degenerate complexes are distinguished:
 *   - the void complex has no faces at all (no facets);
 *   - the complex {∅} has exactly one face, the empty set, stored as the
 *     single facet 0.
 *
 * The facet list is kept sorted and free of containments. The vertex set is
 * the union of the facets, so a vertex of the ambient range that lies in no
 * facet is not a vertex of the complex.
 */
class SimplicialComplex {
public:
    /// Validating constructor: rejects facets outside [0, n) and facet lists with containments.
    SimplicialComplex(int n_vertices, std::vector<VertexSet> facets);

    /// Builds the complex generated by arbitrary faces (non-maximal ones are dropped).
    static SimplicialComplex from_faces(int n_vertices, std::vector<VertexSet> faces);
    static SimplicialComplex void_complex(int n_vertices);
    static SimplicialComplex empty_face_complex(int n_vertices);
    static SimplicialComplex simplex(int n_vertices, VertexSet face);

    int n_vertices() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    VertexSet vertex_set() const { return vertices_; }
    int vertex_count() const { return popcount(vertices_); }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_face() const { return facets_.size() == 1 && facets_.front() == 0; }

    /// Maximum facet dimension; -1 for {∅}, -2 for the void complex.
    int dim() const;
    bool is_pure() const;
    bool has_face(VertexSet face) const;

    /// Vertices shared by every facet (non-zero means the complex is a cone).
    VertexSet cone_points() const;

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

private:
    struct Trusted {};
    SimplicialComplex(int n_vertices, std::vector<VertexSet> facets, Trusted);

    int n_;
    std::vector<VertexSet> facets_;
    VertexSet vertices_ = 0;
};

/// Removes duplicates and faces contained in another face; result is sorted ascending.
std::vector<VertexSet> maximalize(std::vector<VertexSet> faces);

/// Maximal cliques of the graph with adjacency bitsets `adj` (pivoting Bron–Kerbosch).
std::vector<VertexSet> maximal_cliques(const std::vector<VertexSet>& adj);

/// The clique complex of a graph given by adjacency bitsets.
SimplicialComplex clique_complex(const std::vector<VertexSet>& adj);

/// Δ(G): faces are the independent sets of g; built as the clique complex of the complement.
SimplicialComplex independence_complex(const CirculantGraph& g);

/// All faces of dimension k, sorted. k = -1 yields {∅}; out-of-range k yields an empty list.
std::vector<VertexSet> faces(const SimplicialComplex& c, int k);

/// Every face of the complex grouped by dimension: entry i holds the faces of dimension i - 1.
std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c);

struct FHProfile {
    std::vector<long long> f;  ///< f_{-1}, f_0, ..., f_{d-1}
    std::vector<long long> h;  ///< h_0, ..., h_d
    long long chi = 0;         ///< reduced Euler characteristic

    int d() const { return static_cast<int>(f.size()) - 1; }
    bool operator==(const FHProfile&) const = default;
};

/// h-vector from an f-vector (f_{-1} first) by the binomial transform.
std::vector<long long> h_from_f(const std::vector<long long>& f);

/// f- and h-vectors and reduced Euler characteristic. Throws on the void complex.
FHProfile fh_profile(const SimplicialComplex& c);

/// link_c(F). Throws std::invalid_argument when F is not a face.
SimplicialComplex link(const SimplicialComplex& c, VertexSet face);

/// del_c(v): the faces avoiding v.
SimplicialComplex deletion(const SimplicialComplex& c, int v);

/// c restricted to the vertex subset sigma.
SimplicialComplex restriction(const SimplicialComplex& c, VertexSet sigma);

inline bool is_pure(const SimplicialComplex& c) { return c.is_pure(); }
inline int dim(const SimplicialComplex& c) { return c.dim(); }

/// Adjacency bitsets of the 1-skeleton over the ambient vertex range.
std::vector<VertexSet> one_skeleton(const SimplicialComplex& c);

/// Number of connected components of the vertex set; 0 for void and {∅}.
int component_count(const SimplicialComplex& c);

/// True iff the complex has exactly one component.
bool is_connected(const SimplicialComplex& c);

/// Number of edges (f_1) without enumerating higher faces.
std::size_t edge_count(const SimplicialComplex& c);

/**
 * Membership test for the well-covered 2-dimensional case, phrased purely in
 * terms of n and S̄: for every a with |a|_n in S̄,
 *   (1) some b has |b|_n and |b - a|_n in S̄, and
 *   (2) no b != c has |b|_n, |c|_n, |b - a|_n, |c - a|_n, |b - c|_n all in S̄.
 * Throws std::invalid_argument on an empty S̄ (complete graph).
 */
bool check_pure2_criterion(int n, const std::vector<int>& sbar);

/// Triangles {0, a, b} of Δ through vertex 0, split by whether the three circular distances coincide.
struct OrbitSplit {
    std::vector<VertexSet> t;   ///< scalene / isosceles triangles through 0
    std::vector<VertexSet> te;  ///< equilateral triangles through 0

    std::size_t f0_size() const { return t.size() + te.size(); }
};

/**
 * Computes the split of the triangles through 0 for a pure 2-dimensional
 * circulant complex. Throws std::invalid_argument when the criterion fails and
 * std::logic_error if |T| is not a multiple of 3 or |T_e| > 1.
 */
OrbitSplit facet_orbit_split(int n, const std::vector<int>& sbar);

/// h_3 = -1 + n(t - s + 1) [+ n/3 when the equilateral triangle exists], s = |S̄|, t = |T|/3.
long long h3_formula(int n, const std::vector<int>& sbar, long long t, bool has_te);

}  // namespace circ

#endif  // CIRC_COMPLEX_HPP
