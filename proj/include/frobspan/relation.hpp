#pragma once

#include <set>
#include <utility>
#include <vector>

#include "frobspan/span.hpp"

namespace frobspan {

/// Binary relation between finite sets, stored as ordered index pairs.
struct Relation {
  FiniteSet src, dst;
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  Relation(FiniteSet src_, FiniteSet dst_,
           std::set<std::pair<std::size_t, std::size_t>> pairs_ = {});
  Relation(FiniteSet src_, FiniteSet dst_,
           const std::vector<std::pair<std::string, std::string>>& label_pairs);

  bool contains(const std::string& x, const std::string& y) const;
  std::vector<std::pair<std::string, std::string>> label_pairs() const;

  bool operator==(const Relation& o) const {
    return src == o.src && dst == o.dst && pairs == o.pairs;
  }
};

Relation identity_relation(const FiniteSet& x);
Relation graph_relation(const SetMap& f);
Relation transpose_relation(const Relation& r);

/// Relational composite "r then s"; requires r.dst == s.src.
Relation compose_relations(const Relation& r, const Relation& s);

/// The pair (s, r), with r applied first, is monic when every (x, z) in the
/// composite has at most one middle witness.
bool is_monic_pair(const Relation& s, const Relation& r);

/// Forget multiplicities: the image relation of the two legs.
Relation span_to_relation(const Span& s);

/// Formal composable sequence of relations X0 -R1-> X1 -...-> Xn.
struct RelationWord {
  std::vector<FiniteSet> objects;  // n+1 sets
  std::vector<Relation> letters;   // n relations, letter i maps objects[i] to objects[i+1]

  RelationWord(std::vector<FiniteSet> objects_, std::vector<Relation> letters_);
  std::size_t length() const { return letters.size(); }
};

/// Span of all trajectories (x0,...,xn) through the word, with first/last
/// projections as legs. Apex labels are the tuple labels of trajectories.
Span word_trajectories(const RelationWord& w);

/// Greedily contracts the leftmost monic adjacent pair until none remains.
/// The trajectory matrix is unchanged by every contraction.
RelationWord reduce_word(RelationWord w);

/// Two-letter word (backward left leg, forward right leg) representing the
/// span; word_trajectories of the result recovers the span up to iso.
RelationWord span_to_word(const Span& s);

}  // namespace frobspan
