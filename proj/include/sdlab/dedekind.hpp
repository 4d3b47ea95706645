#pragma once

#include "sdlab/rational.hpp"

#include <variant>
#include <vector>

namespace sdlab {

/// pi(k) = a k mod b on [0, b).
struct ZolotarevPerm {
    long b = 0;
    std::vector<long> images;
};

ZolotarevPerm zolotarev(long a, long b);

/// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

enum class DedekindRoute {
    sawtooth,  // sum ((k/b)) ((ak/b))
    weighted,  // sum (k/b) ((ak/b))
    voronoi,   // -(1/b) V_{1,1}(a, b) + (b-1)/4 (4a/3 - 2a/(3b) - 1)
    roots,     // -(1/b) sum 1/((eps^{ak} - 1)(eps^k - 1)) + (b-1)/(4b)
    cayley,    // (1/4b) sum (1+eps^k)/(1-eps^k) (1+eps^{-ak})/(1-eps^{-ak})
    cotangent, // (1/4b) sum cot(pi k/b) cot(pi a k/b)
};

const char* to_string(DedekindRoute route) noexcept;
bool is_exact(DedekindRoute route) noexcept;

/// Exact routes produce a Rational, the trigonometric ones a double.
using DedekindValue = std::variant<Rational, double>;

/// Classical Dedekind sum s(a, b); b >= 1 and gcd(a, b) = 1.
DedekindValue dedekind_sum(long a, long b, DedekindRoute route);
/// s(a, b) by the sawtooth definition.
Rational dedekind_sum(long a, long b);

/// V_{m,n}(a, b) = sum_{k=1}^{b-1} k^m [ak/b]^n.
struct VoronoiParams {
    long a = 1;
    long b = 1;
    unsigned m = 0;
    unsigned n = 0;
};

BigInt voronoi_sum(const VoronoiParams& p);

} // namespace sdlab
