#include "sdlab/torus.hpp"

#include "sdlab/error.hpp"

#include <algorithm>
#include <numeric>

namespace sdlab {

CoprimePair::CoprimePair(long a, long b) : a_(a), b_(b) { require_coprime(a, b); }

NumericalSemigroup CoprimePair::semigroup() const {
    return NumericalSemigroup::from_generators({a_, b_});
}

std::vector<long> torus_gaps_mordell(const CoprimePair& p) {
    const long a = p.a();
    const long b = p.b();
    std::vector<long> out;
    for (long i = 1; i < b; ++i)
        for (long j = 1; j < a; ++j)
            if (i * a + j * b < a * b)
                out.push_back(a * b - i * a - j * b);
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end())
        throw Error(ErrorKind::DuplicateGap, "value " + std::to_string(*dup) + " produced twice");
    return out;
}

LaurentPoly alexander_closed_form(const CoprimePair& p) {
    const LaurentPoly one(1);
    auto one_minus = [&](long e) { return one - LaurentPoly::monomial(e); };
    LaurentPoly num = one_minus(p.a() * p.b()) * one_minus(1);
    LaurentPoly den = one_minus(p.a()) * one_minus(p.b());
    return divide_exact(num, den);
}

std::vector<CoprimePair> coprime_pairs(long max_value) {
    std::vector<CoprimePair> out;
    for (long b = 2; b <= max_value; ++b)
        for (long a = 1; a <= max_value; ++a)
            if (std::gcd(a, b) == 1)
                out.emplace_back(a, b);
    return out;
}

} // namespace sdlab
