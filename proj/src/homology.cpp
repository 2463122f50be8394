#include "circ/homology.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "circ/deadline.hpp"

namespace circ {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1U << 31) || !is_prime(p)) throw std::invalid_argument("field: " + std::to_string(p) + " is not a prime below 2^31");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q" || text == "rationals") return rationals();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value >= (1ULL << 31))
        throw std::invalid_argument("field: expected 'q' or a prime, got '" + text + "'");
    return prime(static_cast<std::uint32_t>(value));
}

std::string Field::name() const { return is_rational() ? "rationals" : "GF(" + std::to_string(p_) + ")"; }

std::vector<std::vector<long long>> SparseMatrix::to_dense() const {
    std::vector<std::vector<long long>> out(rows, std::vector<long long>(cols, 0));
    for (int j = 0; j < cols; ++j) {
        for (auto [r, v] : columns[j]) out[r][j] = v;
    }
    return out;
}

namespace {

SparseMatrix boundary_between(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
    SparseMatrix m;
    m.rows = static_cast<int>(lower.size());
    m.cols = static_cast<int>(upper.size());
    m.columns.resize(upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        auto& col = m.columns[j];
        int k = 0;
        for (VertexSet rest = upper[j]; rest; rest &= rest - 1, ++k) {
            VertexSet facet = upper[j] & ~bit(lowest(rest));
            auto it = std::lower_bound(lower.begin(), lower.end(), facet);
            col.emplace_back(static_cast<int>(it - lower.begin()), (k % 2 == 0) ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
    }
    return m;
}

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow so the caller can restart on big integers.
struct CheckedInt {
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static long long sub(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static long long gcd(long long a, long long b) { return std::gcd(a, b); }
    static bool negative(long long a) { return a < 0; }
};

struct BigOps {
    static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
    static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
    static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
    static bool negative(const BigInt& a) { return a < 0; }
};

template <typename Int, typename Ops>
std::size_t fraction_free_rank(const SparseMatrix& m) {
    using Column = std::vector<std::pair<int, Int>>;
    std::vector<Column> reduced;
    reduced.reserve(m.cols);
    std::vector<int> pivot_of_row(m.rows, -1);
    std::size_t rank = 0;
    Column scratch;
    for (const auto& src : m.columns) {
        Column col;
        col.reserve(src.size());
        for (auto [r, v] : src) col.emplace_back(r, Int(v));
        while (!col.empty()) {
            check_deadline();
            const int low = col.back().first;
            const int p = pivot_of_row[low];
            if (p < 0) break;
            const Column& piv = reduced[p];
            const Int a = piv.back().second;
            const Int b = col.back().second;
            // col <- a * col - b * piv; the entry at `low` cancels.
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < piv.size()) {
                if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                    scratch.emplace_back(col[i].first, Ops::mul(a, col[i].second));
                    ++i;
                } else if (i == col.size() || piv[j].first < col[i].first) {
                    scratch.emplace_back(piv[j].first, Ops::sub(Int(0), Ops::mul(b, piv[j].second)));
                    ++j;
                } else {
                    Int v = Ops::sub(Ops::mul(a, col[i].second), Ops::mul(b, piv[j].second));
                    if (v != 0) scratch.emplace_back(col[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            Int g(0);
            for (const auto& e : scratch) g = Ops::gcd(g, e.second);
            if (g != 0 && g != 1) {
                for (auto& e : scratch) e.second /= g;
            }
            col.swap(scratch);
        }
        if (!col.empty()) {
            pivot_of_row[col.back().first] = static_cast<int>(reduced.size());
            reduced.push_back(std::move(col));
            ++rank;
        }
    }
    return rank;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

}  // namespace

SparseMatrix boundary_matrix(const SimplicialComplex& c, int i) {
    if (i < 0 || i > c.dim()) throw std::invalid_argument("boundary_matrix: index outside [0, dim]");
    return boundary_between(faces(c, i - 1), faces(c, i));
}

std::size_t rank_rational(const SparseMatrix& m) {
    try {
        return fraction_free_rank<long long, CheckedInt>(m);
    } catch (const Overflow&) {
        return fraction_free_rank<BigInt, BigOps>(m);
    }
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    using Column = std::vector<std::pair<int, std::uint64_t>>;
    const std::uint64_t mod = p;
    std::vector<Column> reduced;
    std::vector<int> pivot_of_row(m.rows, -1);
    std::size_t rank = 0;
    Column scratch;
    for (const auto& src : m.columns) {
        Column col;
        for (auto [r, v] : src) {
            long long x = v % static_cast<long long>(mod);
            if (x < 0) x += static_cast<long long>(mod);
            if (x != 0) col.emplace_back(r, static_cast<std::uint64_t>(x));
        }
        while (!col.empty()) {
            check_deadline();
            const int p_idx = pivot_of_row[col.back().first];
            if (p_idx < 0) break;
            const Column& piv = reduced[p_idx];  // normalised: trailing entry is 1
            const std::uint64_t factor = col.back().second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < piv.size()) {
                if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                    scratch.push_back(col[i++]);
                } else if (i == col.size() || piv[j].first < col[i].first) {
                    scratch.emplace_back(piv[j].first, (mod - factor * piv[j].second % mod) % mod);
                    ++j;
                } else {
                    std::uint64_t v = (col[i].second + mod - factor * piv[j].second % mod) % mod;
                    if (v != 0) scratch.emplace_back(col[i].first, v);
                    ++i;
                    ++j;
                }
            }
            col.swap(scratch);
        }
        if (!col.empty()) {
            const std::uint64_t inv = pow_mod(col.back().second, mod - 2, mod);
            for (auto& e : col) e.second = e.second * inv % mod;
            pivot_of_row[col.back().first] = static_cast<int>(reduced.size());
            reduced.push_back(std::move(col));
            ++rank;
        }
    }
    return rank;
}

std::size_t rank_bareiss(const std::vector<std::vector<long long>>& dense) {
    const std::size_t rows = dense.size();
    if (rows == 0) return 0;
    const std::size_t cols = dense.front().size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = dense[i][j];
    }
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < cols && rank < rows; ++k) {
        std::size_t p = rank;
        while (p < rows && a[p][k] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                a[i][j] = (a[rank][k] * a[i][j] - a[i][k] * a[rank][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[rank][k];
        ++rank;
    }
    return rank;
}

std::size_t rank_over(const SparseMatrix& m, const Field& field) {
    return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

long long HomologyProfile::b(int i) const {
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[idx];
}

long long HomologyProfile::euler() const {
    long long sum = 0;
    for (std::size_t idx = 0; idx < betti.size(); ++idx) sum += (idx % 2 == 1) ? betti[idx] : -betti[idx];
    return sum;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const Field& field) {
    HomologyProfile out;
    out.field = field;
    if (c.is_void()) return out;
    if (c.is_empty_face()) {
        out.betti = {1};
        return out;
    }
    const int d = c.dim();
    // A cone is contractible.
    if (c.cone_points() != 0) {
        out.betti.assign(d + 2, 0);
        return out;
    }
    const auto layers = faces_by_dimension(c);
    // rank[i + 1] = rank of ∂_i; ∂_{-1} and ∂_{d+1} are zero maps.
    std::vector<long long> rank(d + 3, 0);
    for (int i = 0; i <= d; ++i) {
        rank[i + 1] = static_cast<long long>(rank_over(boundary_between(layers[i], layers[i + 1]), field));
    }
    out.betti.resize(d + 2);
    for (int i = -1; i <= d; ++i) {
        out.betti[i + 1] = static_cast<long long>(layers[i + 1].size()) - rank[i + 1] - rank[i + 2];
    }
    return out;
}

bool homology_vanishes_below_top(const SimplicialComplex& c, const Field& field) {
    const auto h = reduced_homology(c, field);
    const int d = c.dim();
    for (int i = -1; i < d; ++i) {
        if (h.b(i) != 0) return false;
    }
    return true;
}

ReisnerChecker::ReisnerChecker(const SimplicialComplex& c, Field field) : complex_(c), field_(field) {}

bool ReisnerChecker::link_condition(VertexSet face) {
    if (auto it = memo_.find(face); it != memo_.end()) return it->second;
    check_deadline();
    const bool ok = homology_vanishes_below_top(link(complex_, face), field_);
    memo_.emplace(face, ok);
    return ok;
}

std::optional<VertexSet> ReisnerChecker::first_nonempty_violation() {
    if (nonempty_scan_) return *nonempty_scan_;
    std::optional<VertexSet> found;
    if (!complex_.is_void()) {
        const auto layers = faces_by_dimension(complex_);
        // Large faces have small links, so failures there are cheap to find.
        for (auto layer = layers.rbegin(); layer != layers.rend() && !found; ++layer) {
            for (VertexSet f : *layer) {
                if (f != 0 && !link_condition(f)) {
                    found = f;
                    break;
                }
            }
        }
    }
    nonempty_scan_ = found;
    return found;
}

bool ReisnerChecker::buchsbaum() { return !first_nonempty_violation().has_value(); }

bool ReisnerChecker::cohen_macaulay() {
    if (complex_.is_void()) return true;
    return buchsbaum() && link_condition(0);
}

bool is_cohen_macaulay(const SimplicialComplex& c, const Field& field) { return ReisnerChecker(c, field).cohen_macaulay(); }

bool is_buchsbaum(const SimplicialComplex& c, const Field& field) { return ReisnerChecker(c, field).buchsbaum(); }

}  // namespace circ
