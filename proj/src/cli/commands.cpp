#include "circ/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "circ/algebra.hpp"
#include "circ/report_io.hpp"
#include "circ/survey.hpp"
#include "circ/vd.hpp"

namespace circ::cli {

namespace {

// Raised for conditions that map to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field resolve_field(const std::string& flag) {
    if (!flag.empty()) return Field::parse(flag);
    if (const char* env = std::getenv("CIRC_FIELD"); env && *env) return Field::parse(env);
    return Field::rationals();
}

std::vector<int> to_ints(const std::vector<long long>& values) {
    std::vector<int> out;
    for (long long v : values) {
        if (v < -(1LL << 30) || v > (1LL << 30)) throw std::invalid_argument("integer out of range: " + std::to_string(v));
        out.push_back(static_cast<int>(v));
    }
    return out;
}

CirculantGraph graph_from_flags(int n, const std::string& set, bool as_complement) {
    const auto elems = to_ints(parse_int_list(set));
    return as_complement ? from_complement(n, elems) : CirculantGraph(n, elems);
}

std::string braces(const std::vector<int>& v) { return "{" + join_ints(v) + "}"; }

std::string tuple(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("write to '" + path + "' failed");
}

std::chrono::milliseconds seconds_to_ms(double seconds) {
    if (!(seconds > 0)) throw std::invalid_argument("timeout must be positive");
    return std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
}

struct GraphFlags {
    int n = 0;
    std::string set;
    bool complement = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "number of vertices")->required();
        cmd->add_option("--set", set, "connection set S as a,b,c (or S̄ with --complement)");
        cmd->add_flag("--complement", complement, "interpret --set as the complement set S̄");
    }
};

int cmd_classify(const GraphFlags& gf, const std::string& field_flag, const std::string& out_path, double timeout_s,
                 std::ostream& out) {
    const auto g = graph_from_flags(gf.n, gf.set, gf.complement);
    const auto report = classify(g, ClassifyOptions{resolve_field(field_flag), seconds_to_ms(timeout_s)});
    const std::string text = report_to_json(report).dump(2) + "\n";
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
    return kOk;
}

int cmd_verify_family(int m, std::ostream& out) {
    const auto g = family_graph(m);
    const int n = g.n();
    const auto c = independence_complex(g);
    bool pass = true;

    out << "family m=" << m << ": n=" << n << " sbar=" << braces(complement_set(g)) << '\n';
    const bool pure2 = c.is_pure() && c.dim() == 2;
    out << "pure 2-dimensional: " << (pure2 ? "yes" : "no") << '\n';
    pass = pass && pure2;

    const auto fh = fh_profile(c);
    const long long nn = n;
    const std::vector<long long> formula{1, nn, nn * (m + 2), nn * (m + 2) + (1LL << m)};
    out << "f-vector (enumerated): " << tuple(fh.f) << '\n';
    out << "f-vector (formula):    " << tuple(formula) << '\n';
    pass = pass && fh.f == formula;

    if (pure2 && is_connected(c)) {
        const auto seq = theorem1_sequence(m);
        const auto outcome = verify_shedding_sequence(c, seq);
        const VertexSet expected_terminal = bit(0) | bit(1 << m) | bit(1 << (m + 1));
        out << "shedding sequence: " << outcome.steps.size() << " of " << seq.size() << " steps checked";
        if (outcome.ok()) {
            out << ", every link connected and 1-dimensional\n";
        } else {
            out << ", failed at step " << (*outcome.failed_step + 1) << ": " << outcome.reason << '\n';
        }
        out << "terminal: " << braces(to_vertices(outcome.terminal)) << '\n';
        pass = pass && outcome.ok() && outcome.terminal == expected_terminal;
    } else {
        out << "shedding sequence: not checked (complex is not pure 2-dimensional and connected)\n";
        pass = false;
    }
    out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kOk : kVerificationFailed;
}

int cmd_shed(const GraphFlags& gf, const std::string& sequence, std::ostream& out) {
    const auto g = graph_from_flags(gf.n, gf.set, gf.complement);
    const auto c = independence_complex(g);
    const auto order = to_ints(parse_int_list(sequence));
    const auto outcome = verify_shedding_sequence(c, order);
    for (std::size_t i = 0; i < outcome.steps.size(); ++i) {
        const auto& s = outcome.steps[i];
        out << "step " << (i + 1) << ": vertex " << s.vertex << " link_vertices=" << s.link_vertices
            << " link_edges=" << s.link_edges << " connected=" << (s.connected ? "true" : "false")
            << " dim=" << s.link_dim << (s.remaining_pure ? "" : " (remaining complex not pure)") << '\n';
    }
    out << "terminal: " << braces(to_vertices(outcome.terminal)) << '\n';
    if (outcome.ok()) {
        out << "result: valid\n";
        return kOk;
    }
    out << "result: invalid at step " << (*outcome.failed_step + 1) << ": " << outcome.reason << '\n';
    return kVerificationFailed;
}

int cmd_survey(const SurveyOptions& options, const std::string& out_path, std::ostream& out) {
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw IoError("cannot open '" + out_path + "' for writing");
    }
    const auto result = run_survey(options);
    std::ostream& csv = out_path.empty() ? out : file;
    write_survey_csv(csv, result.rows);
    csv.flush();
    if (!csv) throw IoError("write to '" + out_path + "' failed");

    // With CSV on stdout the summary goes last so the table stays contiguous.
    out << format_summary(result.summary) << '\n';
    for (const auto& v : result.summary.violations) out << "violation: " << v << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Circulant graphs, independence complexes and their algebraic invariants", "circ"};
    app.require_subcommand(1);

    GraphFlags classify_graph;
    std::string classify_field;
    std::string classify_out;
    double classify_timeout = 60.0;
    auto* classify_cmd = app.add_subcommand("classify", "classify one circulant graph and emit a JSON report");
    classify_graph.attach(classify_cmd);
    classify_cmd->add_option("--field", classify_field, "coefficient field: q or a prime (default: $CIRC_FIELD or q)");
    classify_cmd->add_option("--out", classify_out, "write the JSON report to this file");
    classify_cmd->add_option("--timeout", classify_timeout, "time budget in seconds");

    int family_m = 0;
    auto* family_cmd = app.add_subcommand("verify-family", "verify the 3*2^m family and its shedding sequence");
    family_cmd->add_option("--m", family_m, "family parameter (m >= 3)")->required();

    GraphFlags shed_graph;
    std::string shed_sequence;
    auto* shed_cmd = app.add_subcommand("shed", "check a shedding order for a pure 2-dimensional complex");
    shed_graph.attach(shed_cmd);
    shed_cmd->add_option("--sequence", shed_sequence, "vertices to delete, in order, as v1,v2,...");

    SurveyOptions survey_opts;
    std::string survey_field;
    std::string survey_out;
    double survey_timeout = 60.0;
    auto* survey_cmd = app.add_subcommand("survey", "classify every circulant with 3 <= n <= max-n");
    survey_cmd->add_option("--max-n", survey_opts.max_n, "largest vertex count (default 16)");
    survey_cmd->add_option("--min-n", survey_opts.min_n, "smallest vertex count (default 3)");
    survey_cmd->add_flag("--only-dim3", survey_opts.only_dim3, "keep only complexes of dimension 2 (Krull dimension 3)");
    survey_cmd->add_option("--out", survey_out, "CSV output file (default: standard output)");
    survey_cmd->add_option("--jobs", survey_opts.jobs, "worker threads");
    survey_cmd->add_option("--field", survey_field, "coefficient field: q or a prime");
    survey_cmd->add_option("--timeout", survey_timeout, "per-instance time budget in seconds (default 60)");
    survey_cmd->add_flag("--timings", survey_opts.timings, "fill the elapsed_ms column (output is then not reproducible)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        if (*classify_cmd) return cmd_classify(classify_graph, classify_field, classify_out, classify_timeout, out);
        if (*family_cmd) return cmd_verify_family(family_m, out);
        if (*shed_cmd) return cmd_shed(shed_graph, shed_sequence, out);
        if (*survey_cmd) {
            if (survey_opts.max_n < 3 || survey_opts.max_n > kMaxVertices)
                throw std::invalid_argument("--max-n must lie in [3, 64]");
            if (survey_opts.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
            survey_opts.field = resolve_field(survey_field);
            survey_opts.timeout = seconds_to_ms(survey_timeout);
            return cmd_survey(survey_opts, survey_out, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }
    return kBadArguments;
}

}  // namespace circ::cli
