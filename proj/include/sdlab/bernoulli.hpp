#pragma once

#include "sdlab/laurent_poly.hpp"
#include "sdlab/rational.hpp"

#include <complex>
#include <vector>

namespace sdlab {

namespace detail {

inline Rational binomial(unsigned n, unsigned k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(out);
}

template <class T>
T from_rational(const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>)
        return r;
    else
        return T(r.get_d());
}

template <class T>
T ipow(const T& x, unsigned n) {
    T out(1);
    for (unsigned i = 0; i < n; ++i)
        out *= x;
    return out;
}

} // namespace detail

/// M_{b-1}(lambda, m) = sum_{k=0}^{b-1} k^m lambda^k with 0^0 = 1.
template <class T>
T mirimanoff(const T& lambda, unsigned m, long b) {
    T sum(0);
    T lambda_k(1);
    for (long k = 0; k < b; ++k) {
        T kk(1);
        for (unsigned i = 0; i < m; ++i)
            kk *= T(k);
        sum += kk * lambda_k;
        lambda_k *= lambda;
    }
    return sum;
}

/// Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned n);

/// Classical Bernoulli polynomial B_k(x) = sum_i C(k, i) B_i x^{k-i}.
template <class T>
T bernoulli_poly(unsigned k, const T& x) {
    std::vector<Rational> numbers = bernoulli_numbers(k);
    T sum(0);
    for (unsigned i = 0; i <= k; ++i)
        sum += detail::from_rational<T>(detail::binomial(k, i) * numbers[i]) *
               detail::ipow(x, k - i);
    return sum;
}

/// B_k(x, lambda) from t e^{tx} / (lambda e^t - 1). For lambda != 1 it uses
///   (lambda - 1) B_k + lambda sum_{i<k} C(k, i) B_i = k x^{k-1},  B_0 = 0;
/// lambda == 1 falls through to the classical polynomials.
template <class T>
T apostol_bernoulli(unsigned k, const T& x, const T& lambda) {
    if (lambda == T(1))
        return bernoulli_poly(k, x);
    std::vector<T> B(k + 1, T(0));
    T lambda_minus_one = lambda - T(1);
    for (unsigned n = 1; n <= k; ++n) {
        T acc(0);
        for (unsigned i = 0; i < n; ++i)
            acc += detail::from_rational<T>(detail::binomial(n, i)) * B[i];
        T rhs = T(static_cast<long>(n)) * detail::ipow(x, n - 1) - lambda * acc;
        B[n] = rhs / lambda_minus_one;
    }
    return B[k];
}

/// Right side of M_{b-1}(lambda, m) = (lambda^b B_{m+1}(b, lambda) - B_{m+1}(0, lambda))/(m + 1).
template <class T>
T mirimanoff_from_apostol(const T& lambda, unsigned m, long b) {
    T lambda_b(1);
    for (long i = 0; i < b; ++i)
        lambda_b *= lambda;
    T hi = apostol_bernoulli(m + 1, T(b), lambda);
    T lo = apostol_bernoulli(m + 1, T(0), lambda);
    return (lambda_b * hi - lo) / T(static_cast<long>(m + 1));
}

struct RelationResidual {
    double residual = 0; // |LHS - RHS|
    double lhs_abs = 0;  // |LHS|
    bool exact = false;  // computed in exact arithmetic
};

/// |M_{b-1}(lambda, m) - (lambda^b B_{m+1}(b, lambda) - B_{m+1}(0, lambda))/(m+1)|.
RelationResidual mirimanoff_vs_apostol_check(const Rational& lambda, unsigned m, long b);
RelationResidual mirimanoff_vs_apostol_check(CxVal lambda, unsigned m, long b);

} // namespace sdlab
