#include "sdlab/semigroup.hpp"

#include "sdlab/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sdlab {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long> gens) {
    if (gens.empty())
        throw Error(ErrorKind::EmptyGenerators, "at least one generator is required");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() <= 0)
        throw Error(ErrorKind::InvalidArgument,
                    "generators must be positive, got " + std::to_string(gens.front()));
    long g = 0;
    for (long x : gens)
        g = std::gcd(g, x);
    if (g != 1)
        throw Error(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(g));

    NumericalSemigroup S;
    S.generators_ = gens;
    const long lo = gens.front();
    const long hi = gens.back();
    // Schur: F <= (lo - 1)(hi - 1) - 1, so this bound clears the conductor by
    // more than lo.
    const long bound = lo * hi + hi;
    S.member_.assign(static_cast<std::size_t>(bound) + 1, false);
    S.member_[0] = true;
    for (long n = 1; n <= bound; ++n)
        for (long x : gens)
            if (x <= n && S.member_[n - x]) {
                S.member_[n] = true;
                break;
            }
    for (long n = bound - lo + 1; n <= bound; ++n)
        if (!S.member_[n])
            throw Error(ErrorKind::InvalidArgument, "membership table does not reach the conductor");

    for (long n = 1; n <= bound; ++n)
        if (!S.member_[n])
            S.gaps_.push_back(n);
    S.frobenius_ = S.gaps_.empty() ? -1 : S.gaps_.back();
    S.multiplicity_ = lo;
    return S;
}

bool NumericalSemigroup::contains(long n) const noexcept {
    if (n < 0)
        return false;
    if (static_cast<std::size_t>(n) < member_.size())
        return member_[n];
    return true;
}

AperySet apery(const NumericalSemigroup& S, long s) {
    if (s <= 0 || !S.contains(s))
        throw Error(ErrorKind::NotAMember, std::to_string(s) + " is not a positive element");
    AperySet ap;
    ap.modulus = s;
    ap.elements.resize(static_cast<std::size_t>(s));
    for (long k = 0; k < s; ++k) {
        long u = k;
        while (!S.contains(u))
            u += s;
        ap.elements[k] = u;
    }
    return ap;
}

LaurentPoly gap_poly(const NumericalSemigroup& S) { return LaurentPoly::from_exponents(S.gaps()); }

LaurentPoly semigroup_poly(const NumericalSemigroup& S) {
    return LaurentPoly(1) - (LaurentPoly(1) - LaurentPoly::monomial(1)) * gap_poly(S);
}

LaurentPoly hilbert_trunc(const NumericalSemigroup& S, long N) {
    LaurentPoly::Terms terms;
    for (long k = 0; k <= N; ++k)
        if (S.contains(k))
            terms.emplace_hint(terms.end(), k, Rational(1));
    return LaurentPoly::from_terms(std::move(terms));
}

NumericalSemigroup quotient(const NumericalSemigroup& S, long d) {
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "quotient divisor must be >= 1");
    // Every member below conductor + multiplicity generates S/d.
    long conductor = std::max(1L, S.frobenius() / d + 1);
    long m = 1;
    while (!S.contains(d * m))
        ++m;
    std::vector<long> gens;
    for (long x = 1; x < conductor + m; ++x)
        if (S.contains(d * x))
            gens.push_back(x);
    return NumericalSemigroup::from_generators(std::move(gens));
}

Rational genus_quotient_trig(const NumericalSemigroup& S, long d) {
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "quotient divisor must be >= 1");
    // (1/d) sum_{k<d} C_S(eps_d^k) = (class-0 part of C_S)(1).
    return multisection(gap_poly(S), d, 0).coefficient_sum();
}

long genus_quotient_apery(const NumericalSemigroup& S, long d, long s) {
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "quotient divisor must be >= 1");
    if (s <= 0 || !S.contains(d * s))
        throw Error(ErrorKind::NotAMember, std::to_string(s) + " is not a positive element of S/" +
                                                std::to_string(d));
    AperySet ap = apery(S, d * s);
    long sum = 0;
    for (long i = 1; i < s; ++i)
        sum += ap.elements[d * i] / (d * s);
    return sum;
}

LaurentPoly gap_poly_from_apery(const NumericalSemigroup& S, long s) {
    AperySet ap = apery(S, s);
    LaurentPoly out;
    for (long k = 1; k < s; ++k)
        out += geom_sum(ap.elements[k] / s, s).shifted(k);
    return out;
}

} // namespace sdlab
