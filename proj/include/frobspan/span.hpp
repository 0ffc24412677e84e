#pragma once

#include <string>
#include <vector>

#include "frobspan/finite_set.hpp"
#include "frobspan/natmat.hpp"

namespace frobspan {

/// Matrix of fiber cardinalities of a span: counts[x][y] is the number of
/// apex elements over (x, y). Rows are indexed by the source set, columns by
/// the target set, both in canonical label order. Two finite spans with the
/// same endpoints are isomorphic exactly when these matrices are equal, so
/// this is the normal form used for all equality decisions.
class MultiplicityMatrix {
public:
  MultiplicityMatrix(FiniteSet src, FiniteSet dst)
      : src_(std::move(src)), dst_(std::move(dst)), counts_(src_.size(), dst_.size()) {}
  MultiplicityMatrix(FiniteSet src, FiniteSet dst, NatMatrix counts);

  static MultiplicityMatrix identity(const FiniteSet& x);

  const FiniteSet& src() const { return src_; }
  const FiniteSet& dst() const { return dst_; }
  const NatMatrix& counts() const { return counts_; }

  const Nat& at(std::size_t i, std::size_t j) const { return counts_.at(i, j); }
  const Nat& at(const std::string& x, const std::string& y) const {
    return counts_.at(src_.index_of(x), dst_.index_of(y));
  }
  Nat& ref(std::size_t i, std::size_t j) { return counts_.at(i, j); }

  /// Matrix product along a shared middle set: this is the multiplicity
  /// matrix of the composite span.
  MultiplicityMatrix multiply(const MultiplicityMatrix& o) const;

  /// Label-placed Kronecker product over the product sets: the matrix of a
  /// monoidal product of spans.
  MultiplicityMatrix kronecker(const MultiplicityMatrix& o) const;

  /// Power of a square matrix (src == dst); pow(0) is the identity.
  MultiplicityMatrix pow(unsigned long e) const;

  bool is_identity() const { return src_ == dst_ && counts_.is_identity(); }

  bool operator==(const MultiplicityMatrix& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && counts_ == o.counts_;
  }
  bool operator!=(const MultiplicityMatrix& o) const { return !(*this == o); }

private:
  FiniteSet src_, dst_;
  NatMatrix counts_;
};

/// Span of finite sets: an apex with legs onto the source and target.
struct Span {
  FiniteSet src, dst, apex;
  SetMap left;   // apex -> src
  SetMap right;  // apex -> dst

  Span(FiniteSet src_, FiniteSet dst_, FiniteSet apex_, SetMap left_, SetMap right_);
};

Span identity_span(const FiniteSet& x);

/// Composite "f then g" by pullback; requires f.dst == g.src. Pullback
/// elements are labeled "(a|b)" from the contributing apex elements.
Span compose_spans(const Span& f, const Span& g);

/// Monoidal product: product sets with componentwise legs.
Span tensor_spans(const Span& f, const Span& g);

MultiplicityMatrix span_to_matrix(const Span& s);

/// True when the spans have the same endpoints and equal multiplicity
/// matrices, i.e. some bijection of apexes commutes with both legs.
bool spans_isomorphic(const Span& s, const Span& t);

/// True when both legs are bijections (the span represents an isomorphism).
bool is_isomorphism_span(const Span& s);

/// Swap morphism on X×X: apex X×X, left leg the swap, right leg identity.
Span twist_span(const FiniteSet& x);

/// Same apex with the legs (and endpoints) exchanged.
Span reverse_span(const Span& s);

/// Graph of a map as a span (dom, 1, f).
Span span_of_map(const SetMap& f);

// Structural isomorphisms of the monoidal product. These mediate unit and
// associativity comparisons, since •×X and X are distinct as sets.
Span left_unitor_span(const FiniteSet& x);    // •×X ⇸ X
Span right_unitor_span(const FiniteSet& x);   // X×• ⇸ X
Span associator_span(const FiniteSet& x, const FiniteSet& y,
                     const FiniteSet& z);     // (X×Y)×Z ⇸ X×(Y×Z)

}  // namespace frobspan
