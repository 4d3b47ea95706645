#include "sdlab/roots.hpp"

#include "sdlab/error.hpp"

#include <numbers>

namespace sdlab {

CxVal root_of_unity(long n, long j) {
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "root of unity order must be >= 1");
    long r = mod(j, n);
    if (r == 0)
        return {1.0, 0.0};
    // Exact values on the axes.
    if (4 * r == n)
        return {0.0, 1.0};
    if (2 * r == n)
        return {-1.0, 0.0};
    if (4 * r == 3 * n)
        return {0.0, -1.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

CxVal root_eval(const LaurentPoly& f, long n, long j) {
    CxVal sum = 0;
    for (const auto& [e, c] : f.terms())
        sum += c.get_d() * root_of_unity(n, (j % n) * (e % n));
    return sum;
}

} // namespace sdlab
