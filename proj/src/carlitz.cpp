#include "sdlab/carlitz.hpp"

#include "sdlab/error.hpp"
#include "sdlab/roots.hpp"

namespace sdlab {

BiLaurent carlitz_poly(long a, long b) {
    require_coprime(a, b);
    BiLaurent::Terms terms;
    for (long k = 1; k < b; ++k)
        terms[{(a * k) / b, k - 1}] += 1;
    return BiLaurent::from_terms(std::move(terms));
}

CxVal CxBiLaurent::eval(CxVal q, CxVal t) const {
    CxVal sum = 0;
    for (const auto& [e, c] : terms)
        sum += c * std::pow(q, static_cast<int>(e.first)) * std::pow(t, static_cast<int>(e.second));
    return sum;
}

CxBiLaurent dj_poly(long j, long a, long b) {
    require_coprime(a, b);
    CxBiLaurent d;
    for (long k = 1; k < b; ++k)
        d.terms[{-mod(a * k, b), k - 1}] += root_of_unity(b, -mod(j, b) * mod(a * k, b));
    return d;
}

BiLaurent rt_poly(RtKind kind, unsigned m, unsigned n, long a, long b) {
    require_coprime(a, b);
    BiLaurent sum;
    for (long k = 1; k < b; ++k) {
        long fl = (a * k) / b;
        BiLaurent q_factor;
        if (kind == RtKind::R)
            q_factor = geom_quotient(fl, Var::q);
        else
            // (q^{ak} - q^{pi(k)})/(q^b - 1) = q^{pi(k)} (1 + q^b + ... + q^{b(fl-1)})
            q_factor = BiLaurent::embed(geom_sum(fl, b).shifted(mod(a * k, b)), Var::q);
        sum += pow(q_factor, n) * pow(geom_quotient(k, Var::t), m);
    }
    return sum;
}

std::pair<LaurentPoly, LaurentPoly> carlitz_floor_sum(long a, long b) {
    require_coprime(a, b);
    LaurentPoly lhs;
    for (long k = 1; k < b; ++k)
        lhs += LaurentPoly::monomial((a * k) / b);
    LaurentPoly correction;
    for (long k = 1; k < a; ++k)
        correction += LaurentPoly::monomial(k - 1, (b * k) / a);
    LaurentPoly rhs = LaurentPoly::monomial(a - 1, b - 1) -
                      (LaurentPoly::monomial(1) - LaurentPoly(1)) * correction;
    return {lhs, rhs};
}

LaurentPoly carlitz_sawtooth_poly(long a, long b) {
    require_coprime(a, b);
    LaurentPoly::Terms terms;
    for (long k = 0; k < b; ++k) {
        Rational x = make_rational(a * k, b);
        terms[k] = x - Rational(floor(x)) - Rational(1, 2);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

RationalFunction carlitz_sawtooth_closed_form(long a, long b) {
    require_coprime(a, b);
    const LaurentPoly q = LaurentPoly::monomial(1);
    const LaurentPoly one(1);
    const LaurentPoly qb = LaurentPoly::monomial(b);
    const LaurentPoly q_minus_one = q - one;

    LaurentPoly floors;
    for (long k = 0; k < b; ++k)
        floors += LaurentPoly::monomial(k, (a * k) / b);

    LaurentPoly derivative_part = LaurentPoly(b) * qb * q_minus_one - q * (qb - one);
    derivative_part *= make_rational(a, b);
    LaurentPoly half_part = (qb - one) * q_minus_one;
    half_part *= Rational(1, 2);
    LaurentPoly den = q_minus_one * q_minus_one;
    return {derivative_part - half_part - den * floors, den};
}

} // namespace sdlab
