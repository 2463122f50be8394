#include "circ/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "circ/report_io.hpp"

namespace circ {

namespace {

std::string cell(const std::optional<bool>& v) {
    if (!v) return "-";
    return *v ? "true" : "false";
}

std::string cell(const std::optional<long long>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

SurveyRow SurveyRow::from_report(const ClassificationReport& r) {
    SurveyRow row;
    row.n = r.n;
    row.sbar = r.sbar;
    row.dim = r.dim;
    row.pure = r.pure;
    row.vd = r.vd;
    row.cm = r.cm;
    row.buchsbaum = r.buchsbaum;
    row.chi = r.chi;
    row.type = r.type;
    row.level = r.level;
    row.gorenstein = r.gorenstein;
    return row;
}

std::string SurveyRow::to_csv() const {
    std::ostringstream os;
    os << n << ",\"" << join_ints(sbar) << "\"," << dim << ',' << (pure ? "true" : "false") << ',' << cell(vd)
       << ',' << cell(cm) << ',' << cell(buchsbaum) << ',' << chi << ',' << cell(type) << ',' << cell(level) << ','
       << cell(gorenstein) << ',';
    if (elapsed_ms) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", *elapsed_ms);
        os << buf;
    } else {
        os << '-';
    }
    return os.str();
}

std::vector<std::pair<int, std::vector<int>>> survey_instances(int min_n, int max_n) {
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int n = std::max(min_n, 3); n <= max_n; ++n) {
        const int t = n / 2;
        std::vector<std::vector<int>> sets;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < t; ++i) {
                if ((mask >> i) & 1U) s.push_back(i + 1);
            }
            sets.push_back(std::move(s));
        }
        std::sort(sets.begin(), sets.end());
        for (auto& s : sets) out.emplace_back(n, std::move(s));
    }
    return out;
}

SurveyResult run_survey(const SurveyOptions& options) {
    if (options.max_n > kMaxVertices) throw std::invalid_argument("survey: max-n exceeds 64");
    const auto instances = survey_instances(options.min_n, options.max_n);

    struct Slot {
        std::optional<ClassificationReport> report;
        double elapsed_ms = 0;
    };
    std::vector<Slot> slots(instances.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < instances.size(); i = next++) {
                const auto& [n, sbar] = instances[i];
                const auto g = from_complement(n, sbar);
                if (options.only_dim3 && independence_complex(g).dim() != 2) continue;
                const auto start = std::chrono::steady_clock::now();
                slots[i].report = classify(g, ClassifyOptions{options.field, options.timeout});
                slots[i].elapsed_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = instances.size();
        }
    };

    const int jobs = std::max(1, options.jobs);
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    SurveyResult result;
    for (auto& slot : slots) {
        if (!slot.report) continue;
        const auto& r = *slot.report;
        SurveyRow row = SurveyRow::from_report(r);
        if (options.timings) row.elapsed_ms = slot.elapsed_ms;

        auto& s = result.summary;
        ++s.rows;
        if (r.well_covered_dim3) ++s.pure_dim2;
        if (r.vd == true) ++s.vd;
        if (r.cm == true) ++s.cm;
        if (r.level == true) ++s.level;
        if (r.gorenstein == true) ++s.gorenstein;
        if (r.timed_out) ++s.timeouts;
        if (auto v = report_violation(r); !v.empty())
            s.violations.push_back("n=" + std::to_string(r.n) + " sbar={" + join_ints(r.sbar) + "}: " + v);

        result.rows.push_back(std::move(row));
        result.reports.push_back(std::move(*slot.report));
    }
    return result;
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows) {
    out << kSurveyHeader << '\n';
    for (const auto& row : rows) out << row.to_csv() << '\n';
}

std::string format_summary(const SurveySummary& s) {
    std::ostringstream os;
    os << "rows=" << s.rows << " pure_2dim=" << s.pure_dim2 << " vd=" << s.vd << " cm=" << s.cm
       << " level=" << s.level << " gorenstein=" << s.gorenstein << " timeouts=" << s.timeouts
       << " violations=" << s.violations.size();
    return os.str();
}

}  // namespace circ
