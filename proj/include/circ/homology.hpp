#ifndef CIRC_HOMOLOGY_HPP
#define CIRC_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "circ/complex.hpp"

namespace circ {

/// Coefficient field: the rationals or a prime field GF(p) with p < 2^31.
class Field {
public:
    static constexpr std::uint32_t kDefaultPrime = 32003;

    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    /// Accepts "q", "Q", "rationals", or a prime written in decimal.
    static Field parse(const std::string& text);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

/// Column-sparse integer matrix; each column lists (row, value) pairs sorted by row.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> columns;

    std::vector<std::vector<long long>> to_dense() const;
};

/**
 * Matrix of ∂_i from i-faces (columns) to (i-1)-faces (rows), faces listed in
 * ascending bitset order and oriented by ascending vertex order. ∂_0 is the
 * augmentation onto the empty face. Throws std::invalid_argument unless
 * 0 <= i <= dim.
 */
SparseMatrix boundary_matrix(const SimplicialComplex& c, int i);

/// Exact rank over Q by fraction-free sparse elimination (int64 with a big-integer fallback on overflow).
std::size_t rank_rational(const SparseMatrix& m);

/// Rank over GF(p).
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Exact rank over Q by dense Bareiss elimination on big integers.
std::size_t rank_bareiss(const std::vector<std::vector<long long>>& dense);

std::size_t rank_over(const SparseMatrix& m, const Field& field);

struct HomologyProfile {
    Field field = Field::rationals();
    std::vector<long long> betti;  ///< b_{-1}, b_0, ..., b_{d-1}; empty for the void complex

    /// b_i for i >= -1; zero outside the stored range.
    long long b(int i) const;
    long long euler() const;

    bool operator==(const HomologyProfile&) const = default;
};

/// Reduced Betti numbers b_i = nullity(∂_i) - rank(∂_{i+1}).
HomologyProfile reduced_homology(const SimplicialComplex& c, const Field& field);

/// True iff every reduced Betti number of c below dim(c) is zero.
bool homology_vanishes_below_top(const SimplicialComplex& c, const Field& field);

/**
 * Reisner scan over the faces of one complex. Link verdicts are memoised per
 * face, so the Cohen–Macaulay and Buchsbaum questions share work.
 */
class ReisnerChecker {
public:
    ReisnerChecker(const SimplicialComplex& c, Field field);

    /// Link of `face` has vanishing reduced homology below its dimension.
    bool link_condition(VertexSet face);

    /// First non-empty face (largest faces first) whose link fails, if any.
    std::optional<VertexSet> first_nonempty_violation();

    bool cohen_macaulay();
    bool buchsbaum();

private:
    const SimplicialComplex& complex_;
    Field field_;
    std::unordered_map<VertexSet, bool> memo_;
    std::optional<std::optional<VertexSet>> nonempty_scan_;
};

bool is_cohen_macaulay(const SimplicialComplex& c, const Field& field);

/// Every vertex link is Cohen–Macaulay.
bool is_buchsbaum(const SimplicialComplex& c, const Field& field);

}  // namespace circ

#endif  // CIRC_HOMOLOGY_HPP
