#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobspan/errors.hpp"

namespace frobspan {

// Product and pullback elements get deterministic pair labels "(a|b)".
// Components are backslash-escaped so the split is unambiguous even when
// labels themselves contain '(', ')', '|' or '\'.
std::string escape_label(const std::string& s);
std::string pair_label(const std::string& a, const std::string& b);
std::string tuple_label(const std::vector<std::string>& parts);
std::optional<std::pair<std::string, std::string>> split_pair_label(const std::string& s);

/// Finite set of distinct string labels, kept sorted so that every derived
/// object (maps, matrices, JSON) is deterministic.
class FiniteSet {
public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<std::string> labels);

  /// The one-point set used as the monoidal unit.
  static FiniteSet point();

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool contains(const std::string& label) const { return index_.count(label) > 0; }
  std::size_t index_of(const std::string& label) const;
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const FiniteSet& o) const { return labels_ == o.labels_; }
  bool operator!=(const FiniteSet& o) const { return !(*this == o); }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Cartesian product with pair labels "(a|b)".
FiniteSet product(const FiniteSet& a, const FiniteSet& b);

/// Total map between finite sets, stored index-to-index.
class SetMap {
public:
  SetMap() = default;
  SetMap(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> assignment);
  SetMap(FiniteSet dom, FiniteSet cod, const std::map<std::string, std::string>& assignment);

  static SetMap identity(const FiniteSet& x);
  static SetMap constant(const FiniteSet& dom, const FiniteSet& cod, const std::string& value);
  static SetMap from_function(const FiniteSet& dom, const FiniteSet& cod,
                              const std::function<std::string(const std::string&)>& f);

  const FiniteSet& dom() const { return dom_; }
  const FiniteSet& cod() const { return cod_; }

  std::size_t apply_index(std::size_t i) const { return assignment_[i]; }
  const std::string& operator()(const std::string& label) const {
    return cod_.label(assignment_[dom_.index_of(label)]);
  }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Composition "this then g"; requires cod() == g.dom().
  SetMap then(const SetMap& g) const;
  /// Inverse of a bijection.
  SetMap inverse() const;

  /// Sorted list of labels in the image.
  std::vector<std::string> image() const;

  bool operator==(const SetMap& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && assignment_ == o.assignment_;
  }
  bool operator!=(const SetMap& o) const { return !(*this == o); }

private:
  FiniteSet dom_, cod_;
  std::vector<std::size_t> assignment_;
};

/// (f,g): x ↦ (f(x)|g(x)); requires f.dom() == g.dom().
SetMap pair_map(const SetMap& f, const SetMap& g);

/// f×g between product sets, componentwise.
SetMap product_map(const SetMap& f, const SetMap& g);

}  // namespace frobspan
