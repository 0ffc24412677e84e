#pragma once

#include <string>
#include <vector>

#include "frobspan/frobenius.hpp"
#include "frobspan/natmat.hpp"

namespace frobspan {

/// Structure constants of the convolution algebra induced by a Frobenius
/// object: c(x, y, z) is the coefficient of basis element z in the product
/// x·y, and the unit/counit vectors are 0/1 indicators on the basis.
struct FrobeniusAlgebraPresentation {
  FiniteSet basis;
  std::vector<Nat> mult;  // flat |basis|^3, index (x, y, z)
  std::vector<Nat> unit_vec;
  std::vector<Nat> counit_vec;

  const Nat& c(std::size_t x, std::size_t y, std::size_t z) const {
    const std::size_t n = basis.size();
    return mult[(x * n + y) * n + z];
  }
  Nat& c(std::size_t x, std::size_t y, std::size_t z) {
    const std::size_t n = basis.size();
    return mult[(x * n + y) * n + z];
  }
  const Nat& c(const std::string& x, const std::string& y, const std::string& z) const {
    return c(basis.index_of(x), basis.index_of(y), basis.index_of(z));
  }
};

/// Extracts the convolution algebra: c(x, y, z) counts 2-simplices with
/// faces d0 = x, d2 = y, d1 = z; the unit is the indicator of the degenerate
/// 1-simplices and the counit the indicator of their α̂-image.
/// Requires check_frobenius to succeed.
FrobeniusAlgebraPresentation linearize(const FrobeniusDatum& f);

/// Bilinear form B(x, y) = counit(x·y).
NatMatrix gram_matrix(const FrobeniusAlgebraPresentation& p);

/// Checks associativity, the two-sided unit, and nondegeneracy of the
/// bilinear form (nonzero Gram determinant, exactly). Empty result means the
/// presentation is a Frobenius algebra over every field of characteristic 0.
std::vector<std::string> verify_frobenius_algebra(const FrobeniusAlgebraPresentation& p);

/// Direct sum: block-diagonal structure constants on the disjoint union of
/// bases. Colliding labels are disambiguated with "0:" / "1:" prefixes.
FrobeniusAlgebraPresentation direct_sum(const FrobeniusAlgebraPresentation& a,
                                        const FrobeniusAlgebraPresentation& b);

}  // namespace frobspan
