#include "frobspan/finite_set.hpp"

#include <algorithm>

namespace frobspan {

std::string escape_label(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == '(' || c == ')' || c == '|') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + escape_label(a) + "|" + escape_label(b) + ")";
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back('|');
    out += escape_label(parts[i]);
  }
  out.push_back(')');
  return out;
}

std::optional<std::pair<std::string, std::string>> split_pair_label(const std::string& s) {
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') return std::nullopt;
  std::string first, second;
  std::string* current = &first;
  bool seen_bar = false;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '\\') {
      if (i + 2 >= s.size()) return std::nullopt;
      current->push_back(s[++i]);
    } else if (c == '|') {
      if (seen_bar) return std::nullopt;
      seen_bar = true;
      current = &second;
    } else if (c == '(' || c == ')') {
      return std::nullopt;
    } else {
      current->push_back(c);
    }
  }
  if (!seen_bar) return std::nullopt;
  return std::make_pair(first, second);
}

FiniteSet::FiniteSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0 && labels_[i] == labels_[i - 1])
      throw ParseError("FiniteSet: duplicate label \"" + labels_[i] + "\"");
    index_.emplace(labels_[i], i);
  }
}

FiniteSet FiniteSet::point() { return FiniteSet({"*"}); }

std::size_t FiniteSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw ParseError("FiniteSet: unknown label \"" + label + "\"");
  return it->second;
}

FiniteSet product(const FiniteSet& a, const FiniteSet& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(pair_label(x, y));
  return FiniteSet(std::move(labels));
}

SetMap::SetMap(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), assignment_(std::move(assignment)) {
  if (assignment_.size() != dom_.size())
    throw ParseError("SetMap: assignment size does not match domain");
  for (std::size_t t : assignment_)
    if (t >= cod_.size()) throw ParseError("SetMap: target index out of range");
}

SetMap::SetMap(FiniteSet dom, FiniteSet cod, const std::map<std::string, std::string>& assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  assignment_.resize(dom_.size());
  std::vector<bool> seen(dom_.size(), false);
  for (const auto& [from, to] : assignment) {
    if (!dom_.contains(from))
      throw ParseError("SetMap: \"" + from + "\" is not in the domain");
    if (!cod_.contains(to))
      throw ParseError("SetMap: image \"" + to + "\" is not in the codomain");
    std::size_t i = dom_.index_of(from);
    assignment_[i] = cod_.index_of(to);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < dom_.size(); ++i)
    if (!seen[i])
      throw ParseError("SetMap: no image for \"" + dom_.label(i) + "\"");
}

SetMap SetMap::identity(const FiniteSet& x) {
  std::vector<std::size_t> a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = i;
  return SetMap(x, x, std::move(a));
}

SetMap SetMap::constant(const FiniteSet& dom, const FiniteSet& cod, const std::string& value) {
  return SetMap(dom, cod, std::vector<std::size_t>(dom.size(), cod.index_of(value)));
}

SetMap SetMap::from_function(const FiniteSet& dom, const FiniteSet& cod,
                             const std::function<std::string(const std::string&)>& f) {
  std::vector<std::size_t> a(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) a[i] = cod.index_of(f(dom.label(i)));
  return SetMap(dom, cod, std::move(a));
}

bool SetMap::is_injective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (std::size_t t : assignment_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

bool SetMap::is_surjective() const {
  std::vector<bool> hit(cod_.size(), false);
  std::size_t n = 0;
  for (std::size_t t : assignment_)
    if (!hit[t]) {
      hit[t] = true;
      ++n;
    }
  return n == cod_.size();
}

SetMap SetMap::then(const SetMap& g) const {
  if (cod_ != g.dom_) throw ComposeError("SetMap::then: codomain/domain mismatch");
  std::vector<std::size_t> a(dom_.size());
  for (std::size_t i = 0; i < dom_.size(); ++i) a[i] = g.assignment_[assignment_[i]];
  return SetMap(dom_, g.cod_, std::move(a));
}

SetMap SetMap::inverse() const {
  if (!is_bijective()) throw PreconditionError("bijection", "SetMap::inverse: map is not bijective");
  std::vector<std::size_t> a(cod_.size());
  for (std::size_t i = 0; i < dom_.size(); ++i) a[assignment_[i]] = i;
  return SetMap(cod_, dom_, std::move(a));
}

std::vector<std::string> SetMap::image() const {
  std::vector<bool> hit(cod_.size(), false);
  for (std::size_t t : assignment_) hit[t] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cod_.size(); ++i)
    if (hit[i]) out.push_back(cod_.label(i));
  return out;
}

SetMap pair_map(const SetMap& f, const SetMap& g) {
  if (f.dom() != g.dom()) throw ComposeError("pair_map: domains differ");
  FiniteSet cod = product(f.cod(), g.cod());
  std::vector<std::size_t> a(f.dom().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    a[i] = cod.index_of(
        pair_label(f.cod().label(f.apply_index(i)), g.cod().label(g.apply_index(i))));
  return SetMap(f.dom(), std::move(cod), std::move(a));
}

SetMap product_map(const SetMap& f, const SetMap& g) {
  FiniteSet dom = product(f.dom(), g.dom());
  FiniteSet cod = product(f.cod(), g.cod());
  std::vector<std::size_t> a(dom.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (std::size_t j = 0; j < g.dom().size(); ++j) {
      std::size_t from = dom.index_of(pair_label(f.dom().label(i), g.dom().label(j)));
      a[from] = cod.index_of(
          pair_label(f.cod().label(f.apply_index(i)), g.cod().label(g.apply_index(j))));
    }
  return SetMap(std::move(dom), std::move(cod), std::move(a));
}

}  // namespace frobspan
