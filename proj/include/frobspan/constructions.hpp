#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobspan/frobenius.hpp"

namespace frobspan {

/// Finite group given by an explicit Cayley table. The constructor verifies
/// associativity, the identity and inverses.
class Group {
public:
  Group(FiniteSet elements, std::string identity,
        const std::map<std::string, std::map<std::string, std::string>>& table);

  const FiniteSet& elements() const { return elements_; }
  const std::string& identity() const { return identity_; }
  std::size_t mul_index(std::size_t a, std::size_t b) const {
    return table_[a * elements_.size() + b];
  }
  std::string mul(const std::string& a, const std::string& b) const;
  std::string inv(const std::string& a) const;
  bool is_abelian() const;

private:
  FiniteSet elements_;
  std::string identity_;
  std::vector<std::size_t> table_;  // row-major a*b
  std::vector<std::size_t> inverse_;
};

Group cyclic_group(unsigned n);                             // labels "0".."n-1"
Group direct_product(const Group& g, const Group& h);       // labels "(a|b)"
Group symmetric_group_3();                                  // e,(12),(13),(23),(123),(132)

/// Finite groupoid: objects, morphisms, source/target maps and a composition
/// table comp(f, g) = f∘g ("g then f"), defined when src(f) = tgt(g).
/// The constructor verifies identities, associativity and inverses.
class Groupoid {
public:
  Groupoid(FiniteSet objects, FiniteSet morphisms, SetMap src, SetMap tgt,
           const std::map<std::string, std::map<std::string, std::string>>& comp);

  const FiniteSet& objects() const { return objects_; }
  const FiniteSet& morphisms() const { return morphisms_; }
  const SetMap& src() const { return src_; }
  const SetMap& tgt() const { return tgt_; }

  bool composable(std::size_t f, std::size_t g) const {
    return src_.apply_index(f) == tgt_.apply_index(g);
  }
  /// f∘g, requires composable(f, g).
  std::size_t compose_index(std::size_t f, std::size_t g) const;
  std::string compose(const std::string& f, const std::string& g) const;
  std::size_t identity_at(std::size_t object) const { return identities_[object]; }
  std::size_t inv_index(std::size_t f) const { return inverse_[f]; }
  std::string inv(const std::string& f) const;

private:
  FiniteSet objects_, morphisms_;
  SetMap src_, tgt_;
  std::vector<std::size_t> comp_;  // row-major f*g, npos when not composable
  std::vector<std::size_t> identities_;
  std::vector<std::size_t> inverse_;
};

Groupoid groupoid_from_group(const Group& g);  // one object "*"
/// Pair groupoid on {"1",...,"n"}: morphism "(i|j)" is the arrow i -> j.
Groupoid pair_groupoid(unsigned n);

/// Nerve truncated at level 2: X0 = objects, X1 = morphisms, X2 = composable
/// pairs labeled "f|g" with faces d0 = g, d1 = fg, d2 = f.
TruncatedSS2 nerve_of_groupoid(const Groupoid& g);

/// Group Frobenius structure: nerve plus α̂(x) = x⁻¹ω.
FrobeniusDatum group_frobenius(const Group& g, const std::string& omega);

/// Section of the target map assigning each object its identity morphism.
SetMap identity_section(const Groupoid& g);

/// Groupoid Frobenius structure for a section σ of the target map:
/// α̂(x) = x⁻¹ ∘ σ(tgt(x)).
FrobeniusDatum groupoid_frobenius(const Groupoid& g, const SetMap& sigma);

enum class TwoElementAlpha { id, swap };

struct TwoElementDatum {
  FrobeniusDatum datum;
  /// Whether the chosen α̂ is compatible (id needs n_bab = 1, swap needs
  /// n_bbb = 0); when false the datum is still a valid monoid.
  bool frobenius_compatible;
};

/// The two-element family: X0 = {e}, X1 = {a, b}, s0(e) = a, with X2 fiber
/// cardinalities n_aaa = n_bba = n_abb = 1, n_aba = n_baa = n_aab = 0 and
/// n_bab, n_bbb free. Every choice is a monoid.
TwoElementDatum two_element_family(unsigned n_bab, unsigned n_bbb, TwoElementAlpha alpha);

}  // namespace frobspan
