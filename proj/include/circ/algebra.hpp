#ifndef CIRC_ALGEBRA_HPP
#define CIRC_ALGEBRA_HPP

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "circ/circulant.hpp"
#include "circ/complex.hpp"
#include "circ/homology.hpp"

namespace circ {

/**
 * Betti numbers β_{n-3, j} of the Stanley–Reisner ring for j = n-2, n-1, n,
 * obtained from Hochster's formula as sums of reduced Betti numbers of
 * vertex-subset restrictions.
 */
struct BettiStrand {
    int n = 0;
    std::array<long long, 3> entries{};  ///< j = n-2, n-1, n

    int p() const { return n - 3; }
    /// β_{n-3, j}; zero for j outside {n-2, n-1, n}.
    long long at(int j) const;
    long long total() const { return entries[0] + entries[1] + entries[2]; }

    bool operator==(const BettiStrand&) const = default;
};

/// χ̃(c) != 0.
bool chi_nonzero_check(const SimplicialComplex& c);

/// Requires c pure of dimension 2; n is the number of vertices of c.
BettiStrand top_strand(const SimplicialComplex& c, const Field& field);

/**
 * Level ⇔ the strand is concentrated in degree n. Throws
 * std::invalid_argument when cm is false or χ̃ = 0, and std::logic_error if a
 * level verdict comes with a type different from |χ̃|.
 */
bool classify_level(const SimplicialComplex& c, bool cm, const BettiStrand& strand);

/// Shedding vertices in deletion order plus the simplex left at the end.
struct VdCertificate {
    std::vector<int> order;
    std::vector<int> terminal;

    bool operator==(const VdCertificate&) const = default;
};

/// Full verdict record for one circulant graph. Absent optionals mean "not applicable" or "timed out".
struct ClassificationReport {
    int n = 0;
    std::vector<int> conn;
    std::vector<int> sbar;
    std::string field = "rationals";

    int dim = -2;
    bool pure = false;
    bool well_covered_dim3 = false;
    std::vector<long long> f;
    std::vector<long long> h;
    long long chi = 0;

    std::optional<bool> vd;
    std::optional<VdCertificate> certificate;
    std::optional<bool> cm;
    std::optional<bool> buchsbaum;
    std::optional<BettiStrand> strand;
    std::optional<long long> type;
    std::optional<bool> level;
    std::optional<bool> gorenstein;
    std::optional<int> reg_theory;

    bool timed_out = false;

    bool operator==(const ClassificationReport&) const = default;
};

/// Gorenstein ⇔ Cohen–Macaulay type 1; a type-1 verdict must also have h_1 = h_2.
bool classify_gorenstein(const ClassificationReport& report);

/// |S| >= 2. Requires Δ(g) 2-dimensional and vertex decomposable.
bool sbar_size_check(const CirculantGraph& g);

struct ClassifyOptions {
    Field field = Field::rationals();
    std::chrono::milliseconds timeout{60000};
};

/// Builds Δ(g) and runs every classifier on it.
ClassificationReport classify(const CirculantGraph& g, const ClassifyOptions& options = {});

/**
 * Consistency of a finished report: gorenstein ⇒ level ⇒ cm ⇒ buchsbaum ⇒
 * pure, vd ⇒ cm, and χ̃ agreeing with f. Returns a description of the first
 * violation, or an empty string.
 */
std::string report_violation(const ClassificationReport& report);

}  // namespace circ

#endif  // CIRC_ALGEBRA_HPP
