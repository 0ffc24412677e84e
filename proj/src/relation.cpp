#include "frobspan/relation.hpp"

#include <map>

namespace frobspan {

Relation::Relation(FiniteSet src_, FiniteSet dst_,
                   std::set<std::pair<std::size_t, std::size_t>> pairs_)
    : src(std::move(src_)), dst(std::move(dst_)), pairs(std::move(pairs_)) {
  for (const auto& [x, y] : pairs)
    if (x >= src.size() || y >= dst.size())
      throw ParseError("Relation: pair index out of range");
}

Relation::Relation(FiniteSet src_, FiniteSet dst_,
                   const std::vector<std::pair<std::string, std::string>>& label_pairs)
    : src(std::move(src_)), dst(std::move(dst_)) {
  for (const auto& [x, y] : label_pairs) pairs.emplace(src.index_of(x), dst.index_of(y));
}

bool Relation::contains(const std::string& x, const std::string& y) const {
  return pairs.count({src.index_of(x), dst.index_of(y)}) > 0;
}

std::vector<std::pair<std::string, std::string>> Relation::label_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) out.emplace_back(src.label(x), dst.label(y));
  return out;
}

Relation identity_relation(const FiniteSet& x) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < x.size(); ++i) pairs.emplace(i, i);
  return Relation(x, x, std::move(pairs));
}

Relation graph_relation(const SetMap& f) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < f.dom().size(); ++i) pairs.emplace(i, f.apply_index(i));
  return Relation(f.dom(), f.cod(), std::move(pairs));
}

Relation transpose_relation(const Relation& r) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [x, y] : r.pairs) pairs.emplace(y, x);
  return Relation(r.dst, r.src, std::move(pairs));
}

Relation compose_relations(const Relation& r, const Relation& s) {
  if (r.dst != s.src)
    throw ComposeError("compose_relations: endpoints do not chain");
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [x, y] : r.pairs)
    for (const auto& [y2, z] : s.pairs)
      if (y == y2) pairs.emplace(x, z);
  return Relation(r.src, s.dst, std::move(pairs));
}

bool is_monic_pair(const Relation& s, const Relation& r) {
  if (r.dst != s.src) throw ComposeError("is_monic_pair: endpoints do not chain");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> witnesses;
  for (const auto& [x, y] : r.pairs)
    for (const auto& [y2, z] : s.pairs)
      if (y == y2 && ++witnesses[{x, z}] > 1) return false;
  return true;
}

Relation span_to_relation(const Span& s) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < s.apex.size(); ++a)
    pairs.emplace(s.left.apply_index(a), s.right.apply_index(a));
  return Relation(s.src, s.dst, std::move(pairs));
}

RelationWord::RelationWord(std::vector<FiniteSet> objects_, std::vector<Relation> letters_)
    : objects(std::move(objects_)), letters(std::move(letters_)) {
  if (letters.empty()) throw ParseError("RelationWord: at least one letter required");
  if (objects.size() != letters.size() + 1)
    throw ParseError("RelationWord: need one more object than letters");
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i].src != objects[i] || letters[i].dst != objects[i + 1])
      throw ComposeError("RelationWord: letter " + std::to_string(i) +
                         " does not match the object chain");
}

Span word_trajectories(const RelationWord& w) {
  const std::size_t n = w.length();
  // Grow trajectories letter by letter; each is a vector of element indices.
  std::vector<std::vector<std::size_t>> trajectories;
  for (std::size_t x = 0; x < w.objects[0].size(); ++x) trajectories.push_back({x});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : trajectories)
      for (const auto& [a, b] : w.letters[i].pairs)
        if (a == t.back()) {
          auto extended = t;
          extended.push_back(b);
          next.push_back(std::move(extended));
        }
    trajectories = std::move(next);
  }
  std::vector<std::string> apex_labels;
  apex_labels.reserve(trajectories.size());
  for (const auto& t : trajectories) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i <= n; ++i) parts.push_back(w.objects[i].label(t[i]));
    apex_labels.push_back(tuple_label(parts));
  }
  FiniteSet apex(apex_labels);
  std::vector<std::size_t> left(apex.size()), right(apex.size());
  for (std::size_t k = 0; k < trajectories.size(); ++k) {
    std::size_t i = apex.index_of(apex_labels[k]);
    left[i] = trajectories[k].front();
    right[i] = trajectories[k].back();
  }
  return Span(w.objects.front(), w.objects.back(), apex,
              SetMap(apex, w.objects.front(), std::move(left)),
              SetMap(apex, w.objects.back(), std::move(right)));
}

RelationWord reduce_word(RelationWord w) {
  bool contracted = true;
  while (contracted && w.length() > 1) {
    contracted = false;
    for (std::size_t i = 0; i + 1 < w.length(); ++i) {
      if (is_monic_pair(w.letters[i + 1], w.letters[i])) {
        Relation merged = compose_relations(w.letters[i], w.letters[i + 1]);
        std::vector<Relation> letters(w.letters.begin(), w.letters.end());
        letters[i] = std::move(merged);
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        std::vector<FiniteSet> objects(w.objects.begin(), w.objects.end());
        objects.erase(objects.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        w = RelationWord(std::move(objects), std::move(letters));
        contracted = true;
        break;
      }
    }
  }
  return w;
}

RelationWord span_to_word(const Span& s) {
  return RelationWord({s.src, s.apex, s.dst},
                      {transpose_relation(graph_relation(s.left)), graph_relation(s.right)});
}

}  // namespace frobspan
