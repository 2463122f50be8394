#include "circ/report_io.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace circ {

namespace {

template <typename T>
OrderedJson opt(const std::optional<T>& v) {
    return v ? OrderedJson(*v) : OrderedJson(nullptr);
}

template <typename T>
std::optional<T> get_opt(const OrderedJson& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

OrderedJson report_to_json(const ClassificationReport& r) {
    OrderedJson j;
    j["graph"] = {{"n", r.n}, {"conn", r.conn}, {"sbar", r.sbar}};
    j["complex"] = {{"dim", r.dim},   {"pure", r.pure}, {"f", r.f},
                    {"h", r.h},       {"chi", r.chi},   {"well_covered_dim3", r.well_covered_dim3}};
    j["verdicts"] = {{"vd", opt(r.vd)},
                     {"cm", opt(r.cm)},
                     {"buchsbaum", opt(r.buchsbaum)},
                     {"level", opt(r.level)},
                     {"gorenstein", opt(r.gorenstein)},
                     {"type", opt(r.type)},
                     {"reg_theory", opt(r.reg_theory)}};
    if (r.vd == true && r.certificate) {
        j["certificate"] = {{"order", r.certificate->order}, {"terminal", r.certificate->terminal}};
    }
    if (r.strand) {
        const int n = r.strand->n;
        j["strand"] = {{"p", r.strand->p()},
                       {"degrees", std::vector<int>{n - 2, n - 1, n}},
                       {"betti", r.strand->entries}};
    }
    j["field"] = r.field;
    j["timed_out"] = r.timed_out;
    return j;
}

ClassificationReport report_from_json(const OrderedJson& j) {
    ClassificationReport r;
    const auto& g = j.at("graph");
    r.n = g.at("n").get<int>();
    r.conn = g.at("conn").get<std::vector<int>>();
    r.sbar = g.at("sbar").get<std::vector<int>>();

    const auto& c = j.at("complex");
    r.dim = c.at("dim").get<int>();
    r.pure = c.at("pure").get<bool>();
    r.f = c.at("f").get<std::vector<long long>>();
    r.h = c.at("h").get<std::vector<long long>>();
    r.chi = c.at("chi").get<long long>();
    r.well_covered_dim3 = c.value("well_covered_dim3", r.pure && r.dim == 2);

    const auto& v = j.at("verdicts");
    r.vd = get_opt<bool>(v, "vd");
    r.cm = get_opt<bool>(v, "cm");
    r.buchsbaum = get_opt<bool>(v, "buchsbaum");
    r.level = get_opt<bool>(v, "level");
    r.gorenstein = get_opt<bool>(v, "gorenstein");
    r.type = get_opt<long long>(v, "type");
    r.reg_theory = get_opt<int>(v, "reg_theory");

    if (j.contains("certificate")) {
        const auto& cert = j.at("certificate");
        r.certificate = VdCertificate{cert.at("order").get<std::vector<int>>(),
                                      cert.at("terminal").get<std::vector<int>>()};
    }
    if (j.contains("strand")) {
        const auto& s = j.at("strand");
        BettiStrand strand;
        strand.n = s.at("p").get<int>() + 3;
        strand.entries = s.at("betti").get<std::array<long long, 3>>();
        r.strand = strand;
    }
    r.field = j.value("field", std::string("rationals"));
    r.timed_out = j.value("timed_out", false);
    return r;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        long long value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument("malformed integer list '" + text + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace circ
