#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "frobspan/frobenius.hpp"
#include "frobspan/relation.hpp"
#include "frobspan/simplicial.hpp"

namespace frobspan::testing {

// Snake composites at span level, with the unit/associativity isomorphisms
// made explicit. Both are isomorphic to the identity for any bijection.
inline Span snake_right_span(const FrobeniusDatum& f) {
  const FiniteSet& x = f.base.X1;
  Span id_x = identity_span(x);
  Span s = reverse_span(right_unitor_span(x));                   // X ⇸ X×•
  s = compose_spans(s, tensor_spans(id_x, copairing_span(f)));   // ⇸ X×(X×X)
  s = compose_spans(s, reverse_span(associator_span(x, x, x)));  // ⇸ (X×X)×X
  s = compose_spans(s, tensor_spans(pairing_span(f), id_x));     // ⇸ •×X
  return compose_spans(s, left_unitor_span(x));                  // ⇸ X
}

inline Span snake_left_span(const FrobeniusDatum& f) {
  const FiniteSet& x = f.base.X1;
  Span id_x = identity_span(x);
  Span s = reverse_span(left_unitor_span(x));                    // X ⇸ •×X
  s = compose_spans(s, tensor_spans(copairing_span(f), id_x));   // ⇸ (X×X)×X
  s = compose_spans(s, associator_span(x, x, x));                // ⇸ X×(X×X)
  s = compose_spans(s, tensor_spans(id_x, pairing_span(f)));     // ⇸ X×•
  return compose_spans(s, right_unitor_span(x));                 // ⇸ X
}

// Brute-force composite count: tallies matching apex pairs directly, without
// building the pullback. Independent check for compose_spans and the matrix
// product rule.
inline MultiplicityMatrix oracle_compose_matrix(const Span& f, const Span& g) {
  MultiplicityMatrix m(f.src, g.dst);
  for (std::size_t a = 0; a < f.apex.size(); ++a)
    for (std::size_t b = 0; b < g.apex.size(); ++b)
      if (f.right.apply_index(a) == g.left.apply_index(b))
        m.ref(f.left.apply_index(a), g.right.apply_index(b)) += 1;
  return m;
}

// Word matrix as a product of relation indicator matrices; independent of the
// trajectory enumeration in word_trajectories.
inline MultiplicityMatrix oracle_word_matrix(const RelationWord& w) {
  NatMatrix acc = NatMatrix::identity(w.objects.front().size());
  for (const Relation& r : w.letters) {
    NatMatrix step(r.src.size(), r.dst.size());
    for (const auto& [x, y] : r.pairs) step.at(x, y) = 1;
    acc = acc.multiply(step);
  }
  return MultiplicityMatrix(w.objects.front(), w.objects.back(), acc);
}

inline FiniteSet random_set(std::mt19937& rng, const std::string& prefix, std::size_t max_size,
                            std::size_t min_size = 0) {
  std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
  std::size_t n = size_dist(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FiniteSet(labels);
}

inline SetMap random_map(std::mt19937& rng, const FiniteSet& dom, const FiniteSet& cod) {
  if (dom.empty()) return SetMap(dom, cod, std::vector<std::size_t>{});
  std::uniform_int_distribution<std::size_t> pick(0, cod.size() - 1);
  std::vector<std::size_t> a(dom.size());
  for (auto& v : a) v = pick(rng);
  return SetMap(dom, cod, std::move(a));
}

inline Span random_span(std::mt19937& rng, const FiniteSet& src, const FiniteSet& dst,
                        std::size_t max_apex) {
  FiniteSet apex = random_set(rng, "t", max_apex);
  if ((src.empty() || dst.empty()) && !apex.empty()) apex = FiniteSet();
  return Span(src, dst, apex, random_map(rng, apex, src), random_map(rng, apex, dst));
}

inline Relation random_relation(std::mt19937& rng, const FiniteSet& src, const FiniteSet& dst) {
  std::bernoulli_distribution keep(0.4);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < dst.size(); ++y)
      if (keep(rng)) pairs.emplace(x, y);
  return Relation(src, dst, std::move(pairs));
}

inline RelationWord random_word(std::mt19937& rng, std::size_t max_len, std::size_t max_set) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::size_t n = len_dist(rng);
  std::vector<FiniteSet> objects;
  for (std::size_t i = 0; i <= n; ++i)
    objects.push_back(random_set(rng, "x" + std::to_string(i) + "_", max_set, 1));
  std::vector<Relation> letters;
  for (std::size_t i = 0; i < n; ++i)
    letters.push_back(random_relation(rng, objects[i], objects[i + 1]));
  return RelationWord(std::move(objects), std::move(letters));
}

// Random 2-truncated simplicial set, constructed so that the simplicial
// identities always hold: degenerate 2-simplices are added with their forced
// faces, then extra 2-simplices with vertex-compatible face triples.
inline TruncatedSS2 random_tss2(std::mt19937& rng, std::size_t max_x1 = 3,
                                std::size_t max_extra = 4) {
  std::uniform_int_distribution<std::size_t> x0_dist(1, 2);
  std::size_t n0 = x0_dist(rng);
  std::vector<std::string> x0_labels;
  for (std::size_t i = 0; i < n0; ++i) x0_labels.push_back("u" + std::to_string(i));
  FiniteSet X0(x0_labels);

  std::size_t extra1_cap = n0 < max_x1 ? max_x1 - n0 : 0;
  std::uniform_int_distribution<std::size_t> extra1_dist(0, extra1_cap);
  std::size_t extra1 = extra1_dist(rng);
  std::vector<std::string> x1_labels;
  for (std::size_t i = 0; i < n0; ++i) x1_labels.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < extra1; ++i) x1_labels.push_back("x" + std::to_string(i));
  FiniteSet X1(x1_labels);

  // s0 is the section u_i -> e_i; d1_0/d1_1 are forced on im(s0), random
  // elsewhere.
  std::map<std::string, std::string> s0_a;
  for (std::size_t i = 0; i < n0; ++i) s0_a["u" + std::to_string(i)] = "e" + std::to_string(i);
  SetMap s0(X0, X1, s0_a);
  std::uniform_int_distribution<std::size_t> vertex(0, n0 - 1);
  std::map<std::string, std::string> d10_a, d11_a;
  for (const auto& x : X1.labels()) {
    if (x[0] == 'e') {
      d10_a[x] = "u" + x.substr(1);
      d11_a[x] = "u" + x.substr(1);
    } else {
      d10_a[x] = x0_labels[vertex(rng)];
      d11_a[x] = x0_labels[vertex(rng)];
    }
  }
  SetMap d1_0(X1, X0, d10_a), d1_1(X1, X0, d11_a);

  struct Simplex {
    std::string label, f0, f1, f2;
  };
  std::vector<Simplex> simplices;
  std::map<std::string, std::string> s10_a, s11_a;
  for (const auto& x : X1.labels()) {
    bool degenerate_edge = x[0] == 'e';
    // s1_0(x): faces (x, x, s0(d1_1 x)); s1_1(x): faces (s0(d1_0 x), x, x).
    // For x in the image of s0 the two coincide.
    std::string left = "L" + x, right = degenerate_edge ? "L" + x : "R" + x;
    simplices.push_back({left, x, x, s0(d1_1(x))});
    if (!degenerate_edge) simplices.push_back({right, s0(d1_0(x)), x, x});
    s10_a[x] = left;
    s11_a[x] = right;
  }
  // Extra simplices drawn from all vertex-compatible face triples.
  std::vector<std::array<std::string, 3>> compatible;
  for (const auto& f0 : X1.labels())
    for (const auto& f1 : X1.labels())
      for (const auto& f2 : X1.labels())
        if (d1_0(f1) == d1_0(f0) && d1_0(f2) == d1_1(f0) && d1_1(f2) == d1_1(f1))
          compatible.push_back({f0, f1, f2});
  std::uniform_int_distribution<std::size_t> extra_dist(0, max_extra);
  std::size_t extras = compatible.empty() ? 0 : extra_dist(rng);
  std::uniform_int_distribution<std::size_t> pick(0, compatible.empty() ? 0
                                                                        : compatible.size() - 1);
  for (std::size_t i = 0; i < extras; ++i) {
    const auto& faces = compatible[pick(rng)];
    simplices.push_back({"z" + std::to_string(i), faces[0], faces[1], faces[2]});
  }

  std::vector<std::string> x2_labels;
  std::map<std::string, std::string> d20_a, d21_a, d22_a;
  for (const auto& s : simplices) {
    x2_labels.push_back(s.label);
    d20_a[s.label] = s.f0;
    d21_a[s.label] = s.f1;
    d22_a[s.label] = s.f2;
  }
  FiniteSet X2(x2_labels);
  return TruncatedSS2(X0, X1, X2, d1_0, d1_1, SetMap(X2, X1, d20_a), SetMap(X2, X1, d21_a),
                      SetMap(X2, X1, d22_a), s0, SetMap(X1, X2, s10_a), SetMap(X1, X2, s11_a));
}

}  // namespace frobspan::testing
