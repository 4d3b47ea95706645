#pragma once

#include "sdlab/laurent_poly.hpp"

#include <map>
#include <string>
#include <utility>

namespace sdlab {

enum class Var { q, t };

/// Bivariate Laurent polynomial in (q, t) with exact rational coefficients.
class BiLaurent {
  public:
    using Exponent = std::pair<long, long>; // (q, t)
    using Terms = std::map<Exponent, Rational>;

    BiLaurent() = default;
    BiLaurent(long constant);
    BiLaurent(const Rational& constant);

    static BiLaurent monomial(long q_exp, long t_exp, const Rational& coeff = 1);
    static BiLaurent from_terms(Terms terms);
    /// Embeds a univariate polynomial as a polynomial in q or in t.
    static BiLaurent embed(const LaurentPoly& f, Var var);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coeff(long q_exp, long t_exp) const;

    /// Smallest q exponent; requires a nonzero polynomial.
    long min_q_exp() const;

    BiLaurent& operator+=(const BiLaurent& rhs);
    BiLaurent& operator-=(const BiLaurent& rhs);
    BiLaurent& operator*=(const BiLaurent& rhs);
    BiLaurent& operator*=(const Rational& c);

    friend BiLaurent operator+(BiLaurent lhs, const BiLaurent& rhs) { return lhs += rhs; }
    friend BiLaurent operator-(BiLaurent lhs, const BiLaurent& rhs) { return lhs -= rhs; }
    friend BiLaurent operator*(const BiLaurent& lhs, const BiLaurent& rhs);
    BiLaurent operator-() const;

    friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

    /// Multiplies by q^dq t^dt.
    BiLaurent shifted(long dq, long dt) const;
    /// Substitutes q -> q^k for k >= 1.
    BiLaurent substituted_q_power(long k) const;

    Rational eval(const Rational& q, const Rational& t) const;
    CxVal eval(CxVal q, CxVal t) const;

  private:
    void purge();

    Terms terms_;
};

BiLaurent pow(const BiLaurent& f, unsigned n);

/// (v^m - 1)/(v - 1) = 1 + v + ... + v^{m-1} in the chosen variable; 0 for m = 0.
BiLaurent geom_quotient(long m, Var var);

double max_abs_diff(const BiLaurent& f, const BiLaurent& g);

std::string to_string(const BiLaurent& f);

} // namespace sdlab
