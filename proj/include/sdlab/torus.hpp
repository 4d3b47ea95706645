#pragma once

#include "sdlab/laurent_poly.hpp"
#include "sdlab/semigroup.hpp"

#include <vector>

namespace sdlab {

/// Coprime pair (a, b) naming S_{a,b} = <a, b> and the (a, b) torus knot.
class CoprimePair {
  public:
    /// Throws InvalidArgument for nonpositive entries, GcdNotOne otherwise.
    CoprimePair(long a, long b);

    long a() const noexcept { return a_; }
    long b() const noexcept { return b_; }

    NumericalSemigroup semigroup() const;

  private:
    long a_;
    long b_;
};

/// {ab - ia - jb : 0 < i < b, 0 < j < a, ia + jb < ab}, sorted. Throws
/// DuplicateGap if two index pairs produce the same value.
std::vector<long> torus_gaps_mordell(const CoprimePair& p);

/// (1 - q^{ab})(1 - q) / ((1 - q^a)(1 - q^b)) by exact polynomial division.
LaurentPoly alexander_closed_form(const CoprimePair& p);

/// All (a, b) with 1 <= a <= max_value, 2 <= b <= max_value, gcd(a, b) = 1.
std::vector<CoprimePair> coprime_pairs(long max_value);

} // namespace sdlab
