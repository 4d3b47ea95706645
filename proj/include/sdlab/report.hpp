#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace sdlab {

enum class Mode { exact, floating };
enum class Verdict { pass, fail, expected_discrepancy };

const char* to_string(Mode mode) noexcept;
const char* to_string(Verdict verdict) noexcept;

/// Outcome of one identity check.
struct IdentityReport {
    std::string id;
    std::map<std::string, long> params;
    Mode mode = Mode::exact;
    double residual = 0; // 0 on an exact pass
    Verdict verdict = Verdict::pass;
    double elapsed_ms = 0;
    /// Extra computed values; only prop4.T11 fills this in.
    std::map<std::string, std::string> values;
};

/// Canonical order: id, then params (key/value sequence), then mode.
bool canonical_less(const IdentityReport& lhs, const IdentityReport& rhs);

struct VerdictCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t expected_discrepancy = 0;

    std::size_t total() const { return pass + fail + expected_discrepancy; }
};

VerdictCounts count_verdicts(const std::vector<IdentityReport>& reports);

/// Floats rendered with 12 significant digits.
std::string format_float(double x);

/// Array of {id, params, mode, residual, verdict, elapsed_ms[, values]}.
std::string reports_to_json(const std::vector<IdentityReport>& reports);
/// Header id,params,mode,residual,verdict,elapsed_ms,values.
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

} // namespace sdlab
