#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobspan/errors.hpp"

namespace frobspan {

/// Exact integer type used for all counts. Partition functions grow like
/// |G|^g, so machine integers are never used for results.
using Nat = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers, indexed positionally.
class NatMatrix {
public:
  NatMatrix() : rows_(0), cols_(0) {}
  NatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static NatMatrix identity(std::size_t n) {
    NatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Nat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Nat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Nat>& data() const { return data_; }

  bool operator==(const NatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const NatMatrix& o) const { return !(*this == o); }

  NatMatrix multiply(const NatMatrix& o) const {
    if (cols_ != o.rows_)
      throw ComposeError("NatMatrix::multiply: inner dimensions differ");
    NatMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Nat& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  /// Kronecker product with row-major pair indexing: entry ((i,k),(j,l)).
  NatMatrix kronecker(const NatMatrix& o) const {
    NatMatrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Nat& a = at(i, j);
        if (a == 0) continue;
        for (std::size_t k = 0; k < o.rows_; ++k)
          for (std::size_t l = 0; l < o.cols_; ++l)
            out.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
      }
    return out;
  }

  /// Square matrix power by repeated squaring; pow(0) is the identity.
  NatMatrix pow(unsigned long e) const {
    if (rows_ != cols_) throw ComposeError("NatMatrix::pow: matrix not square");
    NatMatrix result = identity(rows_);
    NatMatrix base = *this;
    while (e > 0) {
      if (e & 1UL) result = result.multiply(base);
      e >>= 1UL;
      if (e > 0) base = base.multiply(base);
    }
    return result;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (const Nat& v : data_)
      if (v != 0) return false;
    return true;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Nat> data_;
};

/// Exact determinant by fraction-free Gaussian elimination (Bareiss).
/// All intermediate values stay integral, so the result is exact.
Nat determinant(NatMatrix m);

}  // namespace frobspan
