#pragma once

#include "sdlab/rational.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>

namespace sdlab {

using CxVal = std::complex<double>;

/// Univariate Laurent polynomial with exact rational coefficients, stored
/// sparsely as exponent -> coefficient. Zero coefficients are never stored.
class LaurentPoly {
  public:
    using Terms = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long constant);
    LaurentPoly(const Rational& constant);

    static LaurentPoly monomial(long exp, const Rational& coeff = 1);
    static LaurentPoly from_terms(Terms terms);
    /// Sum of q^e over the given exponents; repeats accumulate.
    static LaurentPoly from_exponents(std::span<const long> exps);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coeff(long exp) const;

    // Both require a nonzero polynomial.
    long min_exp() const;
    long max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiplies by q^k.
    LaurentPoly shifted(long k) const;
    /// Substitutes q -> q^k for k >= 1.
    LaurentPoly substituted_power(long k) const;
    /// Keeps exponents <= max_exp.
    LaurentPoly truncated(long max_exp) const;

    /// f(1), i.e. the sum of coefficients.
    Rational coefficient_sum() const;
    double abs_coefficient_sum() const;

    /// Exact evaluation; x must be nonzero when negative exponents are present.
    Rational eval(const Rational& x) const;
    CxVal eval(CxVal z) const;
    double eval(double x) const;

  private:
    void purge();

    Terms terms_;
};

LaurentPoly pow(const LaurentPoly& f, unsigned n);

/// 1 + q^step + q^{2 step} + ... + q^{(m-1) step}; zero for m = 0.
LaurentPoly geom_sum(long m, long step = 1);

/// Terms of f whose exponents are congruent to r modulo n, exponents unchanged.
LaurentPoly multisection(const LaurentPoly& f, long n, long r);

/// (1/n) sum_j eps_n^{-jk} f(eps_n^j q), computed exactly. The root-of-unity
/// average picks out the class-k terms, so this is multisection(f, n, k).
LaurentPoly root_class_sum(const LaurentPoly& f, long n, long k);

/// Floating-point evaluation of (1/n) sum_j eps_n^{-jk} f(eps_n^j z), term by
/// term over the roots. Oracle for root_class_sum.
CxVal root_class_sum_float(const LaurentPoly& f, long n, long k, CxVal z);

struct DivisionResult {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/// Long division of polynomials after shifting both to nonnegative exponents.
/// den must be nonzero.
DivisionResult divide(const LaurentPoly& num, const LaurentPoly& den);
/// Throws InexactDivision when the remainder is nonzero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// fnum/fden == gnum/gden as rational functions, by cross-multiplication.
bool rational_eq(const LaurentPoly& fnum, const LaurentPoly& fden, const LaurentPoly& gnum,
                 const LaurentPoly& gden);

/// Largest |coefficient| of f - g, as a double. Zero iff f == g.
double max_abs_diff(const LaurentPoly& f, const LaurentPoly& g);

std::string to_string(const LaurentPoly& f, char var = 'q');

} // namespace sdlab
