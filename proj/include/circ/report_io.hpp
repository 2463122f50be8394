#ifndef CIRC_REPORT_IO_HPP
#define CIRC_REPORT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circ/algebra.hpp"

namespace circ {

using OrderedJson = nlohmann::ordered_json;

/**
 * JSON form of a report. Key order is fixed:
 *   graph {n, conn, sbar}
 *   complex {dim, pure, f, h, chi, well_covered_dim3}
 *   verdicts {vd, cm, buchsbaum, level, gorenstein, type, reg_theory}
 *   certificate {order, terminal}      (present iff vd is true)
 *   strand {p, degrees, betti}         (present iff computed)
 *   field, timed_out
 * Absent verdicts are null.
 */
OrderedJson report_to_json(const ClassificationReport& report);

/// Inverse of report_to_json. Throws nlohmann::json::exception on malformed input.
ClassificationReport report_from_json(const OrderedJson& j);

/// "1,2,4"; empty string for the empty list.
std::string join_ints(const std::vector<int>& values);

/// Parses "1,2,4" (whitespace around items tolerated, empty string gives an empty list). Throws std::invalid_argument.
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace circ

#endif  // CIRC_REPORT_IO_HPP
