#ifndef CIRC_SURVEY_HPP
#define CIRC_SURVEY_HPP

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "circ/algebra.hpp"

namespace circ {

inline constexpr const char* kSurveyHeader =
    "n,sbar,dim,pure,vd,cm,buchsbaum,chi,type,level,gorenstein,elapsed_ms";

/// One CSV line of a survey. Absent verdicts serialize as "-".
struct SurveyRow {
    int n = 0;
    std::vector<int> sbar;
    int dim = -2;
    bool pure = false;
    std::optional<bool> vd;
    std::optional<bool> cm;
    std::optional<bool> buchsbaum;
    long long chi = 0;
    std::optional<long long> type;
    std::optional<bool> level;
    std::optional<bool> gorenstein;
    std::optional<double> elapsed_ms;  ///< only filled when timings are requested

    static SurveyRow from_report(const ClassificationReport& r);
    std::string to_csv() const;
};

struct SurveyOptions {
    int min_n = 3;
    int max_n = 16;
    bool only_dim3 = false;
    int jobs = 1;
    Field field = Field::rationals();
    std::chrono::milliseconds timeout{60000};
    bool timings = false;
};

struct SurveySummary {
    std::size_t rows = 0;
    std::size_t pure_dim2 = 0;
    std::size_t vd = 0;
    std::size_t cm = 0;
    std::size_t level = 0;
    std::size_t gorenstein = 0;
    std::size_t timeouts = 0;
    std::vector<std::string> violations;  ///< report_violation messages, prefixed with the instance
};

struct SurveyResult {
    std::vector<ClassificationReport> reports;  ///< same order as rows
    std::vector<SurveyRow> rows;
    SurveySummary summary;
};

/// Every (n, S̄) with min_n <= n <= max_n and S̄ a non-empty subset of {1, ..., floor(n/2)}, ordered by n then S̄ lexicographically.
std::vector<std::pair<int, std::vector<int>>> survey_instances(int min_n, int max_n);

/// Classifies every instance on `jobs` worker threads; output order does not depend on `jobs`.
SurveyResult run_survey(const SurveyOptions& options);

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows);

std::string format_summary(const SurveySummary& s);

}  // namespace circ

#endif  // CIRC_SURVEY_HPP
