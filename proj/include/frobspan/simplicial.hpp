#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frobspan/span.hpp"

namespace frobspan {

/// 2-truncated simplicial set: sets of 0-, 1- and 2-simplices together with
/// the face and degeneracy maps defined at this truncation level.
struct TruncatedSS2 {
  FiniteSet X0, X1, X2;
  SetMap d1_0, d1_1;        // X1 -> X0
  SetMap d2_0, d2_1, d2_2;  // X2 -> X1
  SetMap s0;                // X0 -> X1
  SetMap s1_0, s1_1;        // X1 -> X2

  TruncatedSS2(FiniteSet X0_, FiniteSet X1_, FiniteSet X2_, SetMap d1_0_, SetMap d1_1_,
               SetMap d2_0_, SetMap d2_1_, SetMap d2_2_, SetMap s0_, SetMap s1_0_,
               SetMap s1_1_);
};

struct Violation {
  std::string rule;     // which identity or condition failed
  std::string element;  // witness element, if any
  std::string detail;
};

/// Checks every simplicial identity defined at truncation level 2.
/// Returns an empty list when the data is a genuine 2-truncated simplicial set.
std::vector<Violation> validate_truncated(const TruncatedSS2& t);

/// Unit conditions: a 2-simplex whose d2 (resp. d0) face is degenerate must
/// itself be degenerate via s1_0 (resp. s1_1).
bool check_unit_conditions(const TruncatedSS2& t);
std::vector<Violation> unit_condition_violations(const TruncatedSS2& t);

enum class TacoFlavor { t02, t13 };

/// Pairs of 2-simplices glued along one edge so that they can form two faces
/// of a 3-simplex. Flavor 02 pairs satisfy d1(z) = d0(z'), flavor 13 pairs
/// d1(z) = d2(z').
struct TacoSet {
  TacoFlavor flavor;
  std::vector<std::pair<std::string, std::string>> pairs;
};

TacoSet taco_set(const TruncatedSS2& t, TacoFlavor flavor);

/// Boundary of a taco: four compatible 1-simplices (x01, x12, x23, x03).
struct CompatQuad {
  std::string x01, x12, x23, x03;
  bool operator==(const CompatQuad& o) const = default;
  auto operator<=>(const CompatQuad& o) const = default;
};

CompatQuad boundary_quad(const TruncatedSS2& t,
                         const std::pair<std::string, std::string>& taco, TacoFlavor flavor);

/// All quadruples of 1-simplices satisfying the endpoint compatibility
/// equations (the common codomain of both boundary maps).
std::vector<CompatQuad> compat_quads(const TruncatedSS2& t);

/// Associativity criterion: over every compatible quad the two boundary maps
/// have fibers of equal cardinality, i.e. a boundary-commuting bijection of
/// the two taco sets exists.
bool check_associativity_fibers(const TruncatedSS2& t);

struct MonoidSpans {
  Span eta;  // point ⇸ X1, apex X0
  Span mu;   // X1×X1 ⇸ X1, apex X2
};

/// The unit/multiplication spans carried by any 2-truncated simplicial set
/// (no conditions assumed).
MonoidSpans monoid_spans(const TruncatedSS2& t);

/// Same spans, but only after the simplicial identities, unit conditions and
/// associativity fibers have been verified; throws PreconditionError naming
/// the failed check otherwise.
MonoidSpans monoid_from_simplicial(const TruncatedSS2& t);

/// Direct verification of the monoid axioms by span composition, mediated by
/// the unitor and associator isomorphisms. Independent of the fiber-counting
/// checks above.
bool monoid_axioms_hold(const Span& eta, const Span& mu);

/// Rebuilds the full 2-truncated simplicial structure from unit and
/// multiplication data (E, s0) and (M, d0, d1, d2): the missing faces and
/// degeneracies are recovered from the unit-axiom bijections, which are
/// unique. Throws PreconditionError("monoid", ...) when the data is not a
/// monoid.
TruncatedSS2 simplicial_from_monoid(const FiniteSet& E, const SetMap& s0, const FiniteSet& M,
                                    const SetMap& d0, const SetMap& d1, const SetMap& d2);

}  // namespace frobspan
