#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobspan/simplicial.hpp"

namespace frobspan {

/// A monoid-carrying 2-truncated simplicial set together with a bijection of
/// the 1-simplices encoding a candidate nondegenerate pairing.
struct FrobeniusDatum {
  TruncatedSS2 base;
  SetMap alpha_hat;  // X1 -> X1, bijective

  /// Validates that alpha_hat is a bijection on X1 and that the base passes
  /// the monoid checks; throws PreconditionError otherwise.
  FrobeniusDatum(TruncatedSS2 base_, SetMap alpha_hat_);
};

/// The degeneracy-like map produced by a successful Frobenius check: for each
/// 1-simplex x the unique 2-simplex gamma(x) with faces (α̂(x), *, x).
struct GammaWitness {
  SetMap assignment;  // X1 -> X2
};

struct FrobeniusFailure {
  std::string condition;  // "frobenius.condition_1" or "frobenius.condition_2"
  std::string element;
  std::string detail;
};

struct FrobeniusReport {
  std::optional<GammaWitness> gamma;
  std::vector<FrobeniusFailure> failures;
  bool ok() const { return gamma.has_value(); }
};

/// A pairing X×X ⇸ • is nondegenerate exactly when both components of its
/// left leg are bijections. The source must be a binary product set.
bool check_nondegenerate(const Span& a);

Span eta_span(const FrobeniusDatum& f);
Span mu_span(const FrobeniusDatum& f);

/// Counit: X1 ⇸ •, apex X0 with left leg α̂∘s0.
Span counit_span(const FrobeniusDatum& f);

/// Pairing α: X1×X1 ⇸ •, apex X1 with left leg (1, α̂).
Span pairing_span(const FrobeniusDatum& f);

/// Copairing β: • ⇸ X1×X1, apex X1 with right leg (α̂, 1).
Span copairing_span(const FrobeniusDatum& f);

/// Decides whether the datum is a Frobenius object and constructs the gamma
/// witness; failures name the violated condition and a witness element.
FrobeniusReport check_frobenius(const FrobeniusDatum& f);

/// Comultiplication: X1 ⇸ X1×X1, apex X2, left leg d2_0, right leg
/// (α̂∘d2_2, d2_1). Requires check_frobenius to succeed.
Span comultiplication_span(const FrobeniusDatum& f);

/// Commutativity of the underlying monoid: over every face triple (i, j, k)
/// the fiber of (d0, d1, d2) has the same cardinality as over (k, j, i).
bool check_commutative(const FrobeniusDatum& f);

/// Symmetry of the pairing: α̂∘α̂ = identity.
bool check_symmetric(const FrobeniusDatum& f);

}  // namespace frobspan
