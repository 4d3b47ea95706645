#include "sdlab/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <tuple>

namespace sdlab {

const char* to_string(Mode mode) noexcept { return mode == Mode::exact ? "exact" : "float"; }

const char* to_string(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::expected_discrepancy: return "expected-discrepancy";
    }
    return "unknown";
}

bool canonical_less(const IdentityReport& lhs, const IdentityReport& rhs) {
    return std::tie(lhs.id, lhs.params, lhs.mode) < std::tie(rhs.id, rhs.params, rhs.mode);
}

VerdictCounts count_verdicts(const std::vector<IdentityReport>& reports) {
    VerdictCounts c;
    for (const auto& r : reports) {
        switch (r.verdict) {
        case Verdict::pass: ++c.pass; break;
        case Verdict::fail: ++c.fail; break;
        case Verdict::expected_discrepancy: ++c.expected_discrepancy; break;
        }
    }
    return c;
}

std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string joined_params(const std::map<std::string, long>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty())
            out += ';';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

std::string joined_values(const std::map<std::string, std::string>& values) {
    std::string out;
    for (const auto& [k, v] : values) {
        if (!out.empty())
            out += ';';
        out += k + "=" + v;
    }
    return out;
}

} // namespace

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        os << (i ? ",\n " : "\n ");
        os << "{\"id\":" << quoted(r.id) << ",\"params\":{";
        bool first = true;
        for (const auto& [k, v] : r.params) {
            os << (first ? "" : ",") << quoted(k) << ":" << v;
            first = false;
        }
        os << "},\"mode\":" << quoted(to_string(r.mode)) << ",\"residual\":" << format_float(r.residual)
           << ",\"verdict\":" << quoted(to_string(r.verdict))
           << ",\"elapsed_ms\":" << format_float(r.elapsed_ms);
        if (!r.values.empty()) {
            os << ",\"values\":{";
            first = true;
            for (const auto& [k, v] : r.values) {
                os << (first ? "" : ",") << quoted(k) << ":" << quoted(v);
                first = false;
            }
            os << "}";
        }
        os << "}";
    }
    os << (reports.empty() ? "]\n" : "\n]\n");
    return os.str();
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    os << "id,params,mode,residual,verdict,elapsed_ms,values\n";
    for (const auto& r : reports)
        os << r.id << ',' << joined_params(r.params) << ',' << to_string(r.mode) << ','
           << format_float(r.residual) << ',' << to_string(r.verdict) << ','
           << format_float(r.elapsed_ms) << ',' << joined_values(r.values) << '\n';
    return os.str();
}

} // namespace sdlab
