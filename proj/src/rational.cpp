#include "sdlab/rational.hpp"

#include "sdlab/error.hpp"

namespace sdlab {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

long floor_div(long num, long den) {
    long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

long mod(long num, long den) {
    long r = num % den;
    return r < 0 ? r + den : r;
}

BigInt floor(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

std::string to_fraction_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_display_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational r;
    // mpq_set_str accepts "n" and "n/d" but does not canonicalize.
    if (s.empty() || r.set_str(s, 10) != 0)
        throw Error(ErrorKind::Parse, "not a rational: '" + s + "'");
    if (r.get_den() == 0)
        throw Error(ErrorKind::Parse, "zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

double to_double(const Rational& x) { return x.get_d(); }

} // namespace sdlab
