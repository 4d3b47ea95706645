#pragma once

#include "sdlab/laurent_poly.hpp"

namespace sdlab {

/// eps_n^j = exp(2 pi i j / n), with j reduced mod n first. Quarter turns are
/// returned exactly.
CxVal root_of_unity(long n, long j);

/// f(eps_n^j).
CxVal root_eval(const LaurentPoly& f, long n, long j);

inline bool is_finite(CxVal z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace sdlab
