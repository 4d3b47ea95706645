#pragma once

#include "sdlab/bi_laurent.hpp"
#include "sdlab/laurent_poly.hpp"

#include <map>
#include <utility>

namespace sdlab {

/// c(q, t; a, b) = sum_{k=1}^{b-1} q^{[ak/b]} t^{k-1}.
BiLaurent carlitz_poly(long a, long b);

/// Bivariate Laurent polynomial with complex coefficients. Only d_j needs it.
struct CxBiLaurent {
    std::map<BiLaurent::Exponent, CxVal> terms;

    CxVal eval(CxVal q, CxVal t) const;
};

/// d_j(q, t; a, b) = sum_{k=1}^{b-1} eps_b^{-jak} t^{k-1} q^{-pi(k)}.
CxBiLaurent dj_poly(long j, long a, long b);

enum class RtKind { R, T };

/// R_{m,n} = sum_k ((q^{[ak/b]} - 1)/(q - 1))^n ((t^k - 1)/(t - 1))^m
/// T_{m,n} = sum_k ((q^{ak} - q^{pi(k)})/(q^b - 1))^n ((t^k - 1)/(t - 1))^m
BiLaurent rt_poly(RtKind kind, unsigned m, unsigned n, long a, long b);

/// Both sides of
///   sum_{k=1}^{b-1} q^{[ak/b]} = q^{a-1}(b-1) - (q-1) sum_{k=1}^{a-1} [bk/a] q^{k-1}.
std::pair<LaurentPoly, LaurentPoly> carlitz_floor_sum(long a, long b);

/// sum_{k=0}^{b-1} (ak/b - [ak/b] - 1/2) q^k.
LaurentPoly carlitz_sawtooth_poly(long a, long b);

struct RationalFunction {
    LaurentPoly num;
    LaurentPoly den;
};

/// Closed form of the same polynomial:
///   (a/b)(b q^b (q-1) - q(q^b-1))/(q-1)^2 - (q^b-1)/(2(q-1)) - sum_k [ak/b] q^k.
RationalFunction carlitz_sawtooth_closed_form(long a, long b);

} // namespace sdlab
