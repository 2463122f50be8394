#include "circ/algebra.hpp"

#include <cstdlib>
#include <stdexcept>

#include "circ/deadline.hpp"
#include "circ/vd.hpp"

namespace circ {

long long BettiStrand::at(int j) const {
    if (j < n - 2 || j > n) return 0;
    return entries[j - (n - 2)];
}

bool chi_nonzero_check(const SimplicialComplex& c) { return fh_profile(c).chi != 0; }

BettiStrand top_strand(const SimplicialComplex& c, const Field& field) {
    if (c.dim() != 2 || !c.is_pure()) throw std::invalid_argument("top_strand: complex must be pure 2-dimensional");
    const VertexSet all = c.vertex_set();
    const auto verts = to_vertices(all);
    BettiStrand strand;
    strand.n = static_cast<int>(verts.size());

    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            check_deadline();
            const VertexSet sigma = all & ~bit(verts[i]) & ~bit(verts[j]);
            strand.entries[0] += reduced_homology(restriction(c, sigma), field).b(0);
        }
    }
    for (int v : verts) {
        check_deadline();
        strand.entries[1] += reduced_homology(restriction(c, all & ~bit(v)), field).b(1);
    }
    strand.entries[2] = reduced_homology(c, field).b(2);
    return strand;
}

bool classify_level(const SimplicialComplex& c, bool cm, const BettiStrand& strand) {
    if (!cm) throw std::invalid_argument("classify_level: requires a Cohen-Macaulay complex");
    const long long chi = fh_profile(c).chi;
    if (chi == 0) throw std::invalid_argument("classify_level: requires a non-zero reduced Euler characteristic");
    const bool level = strand.entries[0] == 0 && strand.entries[1] == 0;
    if (level && strand.total() != std::llabs(chi))
        throw std::logic_error("classify_level: level algebra whose type differs from |chi|");
    return level;
}

bool classify_gorenstein(const ClassificationReport& report) {
    if (report.cm != true || report.dim != 2 || !report.type)
        throw std::invalid_argument("classify_gorenstein: requires a Cohen-Macaulay 2-dimensional report with a type");
    const bool gorenstein = *report.type == 1;
    if (gorenstein && (report.h.size() < 3 || report.h[1] != report.h[2]))
        throw std::logic_error("classify_gorenstein: type 1 with a non-symmetric h-vector");
    return gorenstein;
}

bool sbar_size_check(const CirculantGraph& g) {
    const auto c = independence_complex(g);
    if (c.dim() != 2 || !c.is_pure() || !is_vd_recursive(c))
        throw std::invalid_argument("sbar_size_check: Δ must be 2-dimensional and vertex decomposable");
    return g.conn().size() >= 2;
}

ClassificationReport classify(const CirculantGraph& g, const ClassifyOptions& options) {
    ClassificationReport r;
    r.n = g.n();
    r.conn = g.conn();
    r.sbar = complement_set(g);
    r.field = options.field.name();

    const SimplicialComplex c = independence_complex(g);
    const FHProfile fh = fh_profile(c);
    r.dim = c.dim();
    r.pure = c.is_pure();
    r.well_covered_dim3 = r.pure && r.dim == 2;
    r.f = fh.f;
    r.h = fh.h;
    r.chi = fh.chi;

    ScopedDeadline deadline(options.timeout);
    try {
        ReisnerChecker reisner(c, options.field);
        r.buchsbaum = reisner.buchsbaum();
        r.cm = reisner.cohen_macaulay();

        if (r.pure) {
            if (auto chain = vd_decomposition(c)) {
                r.vd = true;
                VdCertificate cert{chain->order, to_vertices(chain->terminal)};
                if (r.dim == 2 && is_connected(c) && !verify_shedding_sequence(c, cert.order).ok())
                    throw std::logic_error("classify: recursive decomposition does not replay as a shedding walk");
                r.certificate = std::move(cert);
            } else {
                r.vd = false;
            }
        }

        if (!*r.cm) {
            r.level = false;
            r.gorenstein = false;
        } else if (r.dim == 2 && !r.conn.empty()) {
            r.strand = top_strand(c, options.field);
            r.type = r.strand->total();
            if (r.chi != 0) {
                r.reg_theory = 3;
                r.level = classify_level(c, true, *r.strand);
                r.gorenstein = classify_gorenstein(r);
            }
        }
    } catch (const TimeoutError&) {
        r.timed_out = true;
    }
    return r;
}

std::string report_violation(const ClassificationReport& r) {
    auto yes = [](const std::optional<bool>& v) { return v.has_value() && *v; };
    auto no = [](const std::optional<bool>& v) { return v.has_value() && !*v; };
    if (yes(r.gorenstein) && no(r.level)) return "gorenstein but not level";
    if (yes(r.level) && no(r.cm)) return "level but not Cohen-Macaulay";
    if (yes(r.vd) && no(r.cm)) return "vertex decomposable but not Cohen-Macaulay";
    if (yes(r.cm) && no(r.buchsbaum)) return "Cohen-Macaulay but not Buchsbaum";
    if (yes(r.buchsbaum) && !r.pure) return "Buchsbaum but not pure";
    if (yes(r.vd) && !r.pure) return "vertex decomposable but not pure";
    long long chi = 0;
    for (std::size_t i = 0; i < r.f.size(); ++i) chi += (i % 2 == 1) ? r.f[i] : -r.f[i];
    if (chi != r.chi) return "reduced Euler characteristic disagrees with the f-vector";
    return {};
}

}  // namespace circ
