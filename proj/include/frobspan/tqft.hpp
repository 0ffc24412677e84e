#pragma once

#include <string>
#include <vector>

#include "frobspan/frobenius.hpp"

namespace frobspan {

/// Square matrix of trajectory counts of the handle morphism: entry (x, y)
/// counts trajectories x -> y through comultiplication followed by
/// multiplication.
using TransferMatrix = MultiplicityMatrix;

/// Requires check_frobenius to succeed.
TransferMatrix transfer_matrix(const FrobeniusDatum& f);

/// Closed-surface invariant of genus g: unit row, g handle factors, counit
/// column, all computed exactly. Requires check_frobenius to succeed.
Nat partition_function(const FrobeniusDatum& f, unsigned genus);

/// Expression tree over the generating morphisms of a Frobenius object.
/// compose children are in categorical order: {compose, f, g} means f∘g,
/// with g applied first.
struct GeneratorWord {
  enum class Kind { unit, counit, mult, comult, id, twist, compose, tensor };
  Kind kind;
  std::vector<GeneratorWord> children;

  static GeneratorWord leaf(Kind k) { return GeneratorWord{k, {}}; }
  static GeneratorWord compose_of(std::vector<GeneratorWord> parts) {
    return GeneratorWord{Kind::compose, std::move(parts)};
  }
  static GeneratorWord tensor_of(std::vector<GeneratorWord> parts) {
    return GeneratorWord{Kind::tensor, std::move(parts)};
  }

  std::string to_string() const;
};

/// The closed genus-g word: counit ∘ (mult ∘ comult)^g ∘ unit.
GeneratorWord genus_word(unsigned genus);

/// Evaluates a word to the multiplicity matrix of the composite morphism
/// X^dom ⇸ X^cod. Matrices are combined by products and Kronecker products;
/// apexes of large composites are never materialized. Requires a well-typed
/// word and check_frobenius to succeed.
MultiplicityMatrix evaluate_word(const FrobeniusDatum& f, const GeneratorWord& w);

}  // namespace frobspan
