#include "sdlab/bernoulli.hpp"

#include <cmath>

namespace sdlab {

std::vector<Rational> bernoulli_numbers(unsigned n) {
    // sum_{i=0}^{j} C(j+1, i) B_i = 0 for j >= 1.
    std::vector<Rational> B(n + 1);
    B[0] = 1;
    for (unsigned j = 1; j <= n; ++j) {
        Rational acc = 0;
        for (unsigned i = 0; i < j; ++i)
            acc += detail::binomial(j + 1, i) * B[i];
        B[j] = -acc / Rational(j + 1);
    }
    return B;
}

RelationResidual mirimanoff_vs_apostol_check(const Rational& lambda, unsigned m, long b) {
    Rational lhs = mirimanoff(lambda, m, b);
    Rational rhs = mirimanoff_from_apostol(lambda, m, b);
    Rational diff = lhs - rhs;
    return {std::abs(diff.get_d()), std::abs(lhs.get_d()), true};
}

RelationResidual mirimanoff_vs_apostol_check(CxVal lambda, unsigned m, long b) {
    CxVal lhs = mirimanoff(lambda, m, b);
    CxVal rhs = mirimanoff_from_apostol(lambda, m, b);
    return {std::abs(lhs - rhs), std::abs(lhs), false};
}

} // namespace sdlab
