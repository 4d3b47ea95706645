#pragma once

#include "sdlab/report.hpp"
#include "sdlab/semigroup.hpp"

#include <utility>

namespace sdlab {

struct Tolerances {
    double relative = 1e-8;   // |lhs - rhs| <= relative (1 + |lhs|)
    double prop2 = 1e-6;      // multinomial sums cancel more
    double absolute = 1e-9;   // gap values and the trigonometric Dedekind routes
};

// Each checker compares two independently computed sides. Exact mode never
// touches floating point; float mode evaluates the literal root-of-unity sums.

/// H_{a,b}(q) (1 - q^a)(1 - q^b) = 1 - q^{ab}, using the truncation H_N for N >= ab.
IdentityReport check_eq1(long a, long b, long N);
/// Mordell's gap set against the membership table of <a, b>.
IdentityReport check_mordell(long a, long b);
/// Restricted double sum over ia + jb < ab against H - q^{ab}/(1 - q).
IdentityReport check_restricted_sum(long a, long b);
/// A = closed form = 1 - (1 - q) C = (1 - q) H, and g = (a - 1)(b - 1)/2.
IdentityReport check_alexander_chain(long a, long b);

/// Eqs (2) and (3) for s in S and 0 <= k < s.
IdentityReport check_prop1(const NumericalSemigroup& S, long s, long k, Mode mode,
                           const Tolerances& tol = {});
/// Eqs (4) and (5): class pi(k) of S_{a,b} modulo b, Apery element ak.
IdentityReport check_prop1_ab(long a, long b, long k, Mode mode, const Tolerances& tol = {});
/// C_S assembled from Ap_s(S) equals the gap polynomial.
IdentityReport check_eq6(const NumericalSemigroup& S, long s);

enum class Prop2Form { mirimanoff, apostol };

/// V_{m,n}(a, b) against the composition sum; requires m >= 1, n <= 3, b <= 12.
IdentityReport check_prop2(long a, long b, unsigned m, unsigned n, Prop2Form form,
                           const Tolerances& tol = {});
/// The n = 1 case as a single sum over j; any b.
IdentityReport check_prop2_vm1(long a, long b, unsigned m, Prop2Form form,
                               const Tolerances& tol = {});
/// M_{b-1}(eps_b^j, m) against the Apostol-Bernoulli expression (float).
IdentityReport check_mirimanoff_apostol(long b, long j, unsigned m, const Tolerances& tol = {});
/// Same relation for a rational lambda = num/den != 1, exactly.
IdentityReport check_mirimanoff_apostol_exact(long num, long den, unsigned m, long b);

IdentityReport check_prop3(long a, long b, Mode mode, const Tolerances& tol = {});
/// R_{1,1} identity (exact) and the T_{1,1} display (expected discrepancy).
std::pair<IdentityReport, IdentityReport> check_prop4(long a, long b);
IdentityReport check_cor510(long a, long b);
IdentityReport check_sawtooth_poly(long a, long b);
IdentityReport check_prop5(long a, long b, Mode mode, const Tolerances& tol = {});
/// C_{a,b}(eps_b^k) closed form for 0 < k < b (float); genus at k = 0 (exact).
IdentityReport check_gap_values(long a, long b, long k, const Tolerances& tol = {});
/// Exact routes agree exactly (exact mode); trigonometric routes agree within
/// the absolute tolerance (float mode).
IdentityReport check_dedekind_routes(long a, long b, Mode mode, const Tolerances& tol = {});
/// s(a, b) + s(b, a) = -1/4 + (a/b + b/a + 1/(ab))/12.
IdentityReport check_reciprocity(long a, long b);
IdentityReport check_prop6(long a, long b, Mode mode, const Tolerances& tol = {});
/// genus_quotient_apery (every valid s <= 20) = genus(S/d) = genus_quotient_trig.
IdentityReport check_prop7(const NumericalSemigroup& S, long d);
/// The three root-of-unity forms of g(S/d), in floating point.
IdentityReport check_quotient_trig(const NumericalSemigroup& S, long d, const Tolerances& tol = {});

/// Valid s for check_prop7: positive elements of S/d not exceeding 20.
std::vector<long> quotient_members(const NumericalSemigroup& S, long d, long s_max = 20);

} // namespace sdlab
