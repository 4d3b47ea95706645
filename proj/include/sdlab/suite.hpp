#pragma once

#include "sdlab/identities.hpp"
#include "sdlab/report.hpp"
#include "sdlab/semigroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sdlab {

/// Parameter ranges for a verification sweep. Pair bounds refer to ordered
/// coprime pairs (a, b) with a, b <= bound.
struct SuiteRanges {
    long torus_max = 30;        // eq1.*, prop1.ab
    long identity_max = 20;     // eq1.restricted, prop3, prop4, cor510, sawtooth.poly, prop5, prop7 pairs
    long prop2_max = 12;        // composition sums, mirimanoff.apostol
    unsigned prop2_m_max = 4;
    unsigned prop2_n_max = 3;
    long vm1_max = 40;          // prop2.vm1.*
    long gap_values_max = 30;
    long dedekind_max = 50;
    long reciprocity_max = 40;
    long prop6_max = 50;
    int semigroups = 20;        // random population size
    long gens_max = 30;         // random generators drawn from [2, gens_max]
    long member_max = 25;       // s for prop1 / eq6
    long quotient_d_max = 8;

    /// Every bound lowered to at most limit.
    SuiteRanges capped(long limit) const;
    /// Ranges that select nothing.
    static SuiteRanges none();
};

struct SuiteOptions {
    SuiteRanges ranges;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    /// Identity id prefixes ("prop6" selects "prop6.eq7"); empty selects all.
    std::vector<std::string> identities;
    /// Record elapsed_ms; off by default so equal seeds give identical reports.
    bool timing = false;
    Tolerances tolerances;
};

/// count semigroups with 2-4 generators drawn from [2, gens_max], rerolled
/// until the gcd is 1. Deterministic in seed on every platform.
std::vector<NumericalSemigroup> random_semigroups(int count, long gens_max, std::uint64_t seed);

/// True when id equals the filter or starts with filter followed by '.'.
bool matches_identity(const std::string& id, const std::vector<std::string>& filters);

/// Runs every checker over the ranges; result is in canonical order.
std::vector<IdentityReport> run_suite(const SuiteOptions& options);

} // namespace sdlab
