#pragma once

#include "sdlab/laurent_poly.hpp"

#include <vector>

namespace sdlab {

/// Numerical semigroup generated by a finite set of positive integers with
/// gcd 1. Immutable after construction.
class NumericalSemigroup {
  public:
    /// Throws EmptyGenerators, InvalidArgument (nonpositive generator) or
    /// GcdNotOne.
    static NumericalSemigroup from_generators(std::vector<long> gens);

    const std::vector<long>& generators() const noexcept { return generators_; }
    const std::vector<long>& gaps() const noexcept { return gaps_; }
    /// Largest gap; -1 for the full semigroup.
    long frobenius() const noexcept { return frobenius_; }
    long conductor() const noexcept { return frobenius_ + 1; }
    long genus() const noexcept { return static_cast<long>(gaps_.size()); }
    /// Smallest nonzero element.
    long multiplicity() const noexcept { return multiplicity_; }

    bool contains(long n) const noexcept;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gaps_ == b.gaps_;
    }

  private:
    NumericalSemigroup() = default;

    std::vector<long> generators_;
    std::vector<bool> member_; // over [0, table bound]
    std::vector<long> gaps_;
    long frobenius_ = -1;
    long multiplicity_ = 1;
};

/// Ap_s(S): elements[k] is the least element of S congruent to k mod s.
struct AperySet {
    long modulus = 0;
    std::vector<long> elements;
};

/// Throws NotAMember unless s is a positive element of S.
AperySet apery(const NumericalSemigroup& S, long s);

/// C_S(q): sum of q^g over the gaps.
LaurentPoly gap_poly(const NumericalSemigroup& S);
/// A_S(q) = 1 - (1 - q) C_S(q).
LaurentPoly semigroup_poly(const NumericalSemigroup& S);
/// Sum of q^k over k in S with k <= N.
LaurentPoly hilbert_trunc(const NumericalSemigroup& S, long N);

/// S/d = {s >= 0 : d s in S}; d >= 1.
NumericalSemigroup quotient(const NumericalSemigroup& S, long d);

/// g(S/d) through the root-of-unity average (1/d) sum_k C_S(eps_d^k), which is
/// exactly the number of gaps of S divisible by d. Returned as a rational so
/// integrality stays checkable.
Rational genus_quotient_trig(const NumericalSemigroup& S, long d);

/// g(S/d) = sum_{i=1}^{s-1} [a_{di} / (ds)] with a_l from Ap_{ds}(S).
/// Throws NotAMember unless s is a positive element of S/d.
long genus_quotient_apery(const NumericalSemigroup& S, long d, long s);

/// C_S(q) = sum_k q^k (q^{s [a_k/s]} - 1)/(q^s - 1), each column expanded as a
/// geometric sum.
LaurentPoly gap_poly_from_apery(const NumericalSemigroup& S, long s);

} // namespace sdlab
