#include "sdlab/dedekind.hpp"

#include "sdlab/error.hpp"
#include "sdlab/roots.hpp"

#include <cmath>
#include <numbers>

namespace sdlab {

ZolotarevPerm zolotarev(long a, long b) {
    require_coprime(a, b);
    ZolotarevPerm pi;
    pi.b = b;
    pi.images.resize(static_cast<std::size_t>(b));
    for (long k = 0; k < b; ++k)
        pi.images[k] = mod(a * k, b);
    return pi;
}

Rational sawtooth(const Rational& x) {
    if (x.get_den() == 1)
        return 0;
    Rational frac = x - Rational(floor(x));
    return frac - Rational(1, 2);
}

const char* to_string(DedekindRoute route) noexcept {
    switch (route) {
    case DedekindRoute::sawtooth: return "sawtooth";
    case DedekindRoute::weighted: return "weighted";
    case DedekindRoute::voronoi: return "voronoi";
    case DedekindRoute::roots: return "roots";
    case DedekindRoute::cayley: return "cayley";
    case DedekindRoute::cotangent: return "cotangent";
    }
    return "unknown";
}

bool is_exact(DedekindRoute route) noexcept {
    return route == DedekindRoute::sawtooth || route == DedekindRoute::weighted ||
           route == DedekindRoute::voronoi;
}

Rational dedekind_sum(long a, long b) {
    require_coprime(a, b);
    Rational s = 0;
    for (long k = 1; k < b; ++k)
        s += sawtooth(make_rational(k, b)) * sawtooth(make_rational(a * k, b));
    return s;
}

namespace {

Rational dedekind_weighted(long a, long b) {
    Rational s = 0;
    for (long k = 1; k < b; ++k)
        s += make_rational(k, b) * sawtooth(make_rational(a * k, b));
    return s;
}

Rational dedekind_voronoi(long a, long b) {
    Rational v(voronoi_sum({a, b, 1, 1}));
    Rational correction = make_rational(b - 1, 4) * (make_rational(4 * a, 3) - make_rational(2 * a, 3 * b) - 1);
    return -v / b + correction;
}

double dedekind_roots(long a, long b) {
    CxVal sum = 0;
    for (long k = 1; k < b; ++k)
        sum += 1.0 / ((root_of_unity(b, a * k) - 1.0) * (root_of_unity(b, k) - 1.0));
    return (-sum / static_cast<double>(b)).real() + static_cast<double>(b - 1) / (4.0 * b);
}

double dedekind_cayley(long a, long b) {
    CxVal sum = 0;
    for (long k = 1; k < b; ++k) {
        CxVal u = root_of_unity(b, k);
        CxVal v = root_of_unity(b, -a * k);
        sum += (1.0 + u) / (1.0 - u) * ((1.0 + v) / (1.0 - v));
    }
    return sum.real() / (4.0 * b);
}

double dedekind_cotangent(long a, long b) {
    double sum = 0;
    for (long k = 1; k < b; ++k) {
        // Reduce ak mod b so the angle stays in (0, pi).
        double x = std::numbers::pi * static_cast<double>(k) / b;
        double y = std::numbers::pi * static_cast<double>(mod(a * k, b)) / b;
        sum += 1.0 / (std::tan(x) * std::tan(y));
    }
    return sum / (4.0 * b);
}

} // namespace

DedekindValue dedekind_sum(long a, long b, DedekindRoute route) {
    require_coprime(a, b);
    switch (route) {
    case DedekindRoute::sawtooth: return dedekind_sum(a, b);
    case DedekindRoute::weighted: return dedekind_weighted(a, b);
    case DedekindRoute::voronoi: return dedekind_voronoi(a, b);
    case DedekindRoute::roots: return dedekind_roots(a, b);
    case DedekindRoute::cayley: return dedekind_cayley(a, b);
    case DedekindRoute::cotangent: return dedekind_cotangent(a, b);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown route");
}

BigInt voronoi_sum(const VoronoiParams& p) {
    require_coprime(p.a, p.b);
    BigInt sum = 0;
    for (long k = 1; k < p.b; ++k) {
        BigInt km, fl;
        mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), p.m);
        mpz_ui_pow_ui(fl.get_mpz_t(), static_cast<unsigned long>((p.a * k) / p.b), p.n);
        sum += km * fl;
    }
    return sum;
}

} // namespace sdlab
