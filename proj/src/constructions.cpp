#include "frobspan/constructions.hpp"

#include <array>
#include <limits>

namespace frobspan {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

Group::Group(FiniteSet elements, std::string identity,
             const std::map<std::string, std::map<std::string, std::string>>& table)
    : elements_(std::move(elements)), identity_(std::move(identity)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw ParseError("Group: carrier must be nonempty");
  if (!elements_.contains(identity_))
    throw ParseError("Group: identity \"" + identity_ + "\" is not an element");
  table_.assign(n * n, npos);
  for (const auto& [a, row] : table) {
    std::size_t ia = elements_.index_of(a);
    for (const auto& [b, c] : row) table_[ia * n + elements_.index_of(b)] = elements_.index_of(c);
  }
  for (std::size_t i = 0; i < n * n; ++i)
    if (table_[i] == npos) throw ParseError("Group: multiplication table is not total");
  std::size_t e = elements_.index_of(identity_);
  for (std::size_t a = 0; a < n; ++a)
    if (table_[e * n + a] != a || table_[a * n + e] != a)
      throw PreconditionError("group.identity",
                              "Group: \"" + identity_ + "\" is not a two-sided identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a * n + b] * n + c] != table_[a * n + table_[b * n + c]])
          throw PreconditionError("group.associativity", "Group: multiplication not associative");
  inverse_.assign(n, npos);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == e && table_[b * n + a] == e) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == npos)
      throw PreconditionError("group.inverses",
                              "Group: \"" + elements_.label(a) + "\" has no inverse");
}

std::string Group::mul(const std::string& a, const std::string& b) const {
  return elements_.label(mul_index(elements_.index_of(a), elements_.index_of(b)));
}

std::string Group::inv(const std::string& a) const {
  return elements_.label(inverse_[elements_.index_of(a)]);
}

bool Group::is_abelian() const {
  const std::size_t n = elements_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] != table_[b * n + a]) return false;
  return true;
}

Group cyclic_group(unsigned n) {
  if (n == 0) throw ParseError("cyclic_group: order must be positive");
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::map<std::string, std::map<std::string, std::string>> table;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      table[labels[a]][labels[b]] = labels[(a + b) % n];
  return Group(FiniteSet(labels), labels[0], table);
}

Group direct_product(const Group& g, const Group& h) {
  std::vector<std::string> labels;
  for (const auto& a : g.elements().labels())
    for (const auto& b : h.elements().labels()) labels.push_back(pair_label(a, b));
  std::map<std::string, std::map<std::string, std::string>> table;
  for (const auto& a1 : g.elements().labels())
    for (const auto& b1 : h.elements().labels())
      for (const auto& a2 : g.elements().labels())
        for (const auto& b2 : h.elements().labels())
          table[pair_label(a1, b1)][pair_label(a2, b2)] =
              pair_label(g.mul(a1, a2), h.mul(b1, b2));
  return Group(FiniteSet(labels), pair_label(g.identity(), h.identity()), table);
}

Group symmetric_group_3() {
  // Permutations of {1,2,3} in cycle notation; composition "a then b" read
  // as b∘a would be the other convention; here mul(a,b) applies b first.
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  // Each permutation as images of 1,2,3.
  const std::map<std::string, std::array<int, 3>> perms = {
      {"e", {1, 2, 3}},     {"(12)", {2, 1, 3}},  {"(13)", {3, 2, 1}},
      {"(23)", {1, 3, 2}},  {"(123)", {2, 3, 1}}, {"(132)", {3, 1, 2}},
  };
  auto find_name = [&](const std::array<int, 3>& p) {
    for (const auto& [name, q] : perms)
      if (p == q) return name;
    throw Error("symmetric_group_3: permutation lookup failed");
  };
  std::map<std::string, std::map<std::string, std::string>> table;
  for (const auto& [a, pa] : perms)
    for (const auto& [b, pb] : perms) {
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = pa[pb[i] - 1];  // (a*b)(i) = a(b(i))
      table[a][b] = find_name(ab);
    }
  return Group(FiniteSet(names), "e", table);
}

Groupoid::Groupoid(FiniteSet objects, FiniteSet morphisms, SetMap src, SetMap tgt,
                   const std::map<std::string, std::map<std::string, std::string>>& comp)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      src_(std::move(src)),
      tgt_(std::move(tgt)) {
  const std::size_t n = morphisms_.size();
  if (src_.dom() != morphisms_ || src_.cod() != objects_ || tgt_.dom() != morphisms_ ||
      tgt_.cod() != objects_)
    throw ParseError("Groupoid: src/tgt must map morphisms to objects");
  comp_.assign(n * n, npos);
  for (const auto& [f, row] : comp) {
    std::size_t fi = morphisms_.index_of(f);
    for (const auto& [g, h] : row) {
      std::size_t gi = morphisms_.index_of(g);
      if (!composable(fi, gi))
        throw ParseError("Groupoid: table entry for non-composable pair (" + f + ", " + g + ")");
      comp_[fi * n + gi] = morphisms_.index_of(h);
    }
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      if (composable(f, g)) {
        std::size_t h = comp_[f * n + g];
        if (h == npos)
          throw ParseError("Groupoid: composition missing for (" + morphisms_.label(f) + ", " +
                           morphisms_.label(g) + ")");
        if (src_.apply_index(h) != src_.apply_index(g) ||
            tgt_.apply_index(h) != tgt_.apply_index(f))
          throw PreconditionError("groupoid.endpoints",
                                  "Groupoid: composite has wrong source or target");
      }
  // Identities: for each object a morphism acting neutrally on both sides.
  identities_.assign(objects_.size(), npos);
  for (std::size_t i = 0; i < n; ++i) {
    if (src_.apply_index(i) != tgt_.apply_index(i)) continue;
    std::size_t obj = src_.apply_index(i);
    bool neutral = true;
    for (std::size_t f = 0; f < n && neutral; ++f) {
      if (composable(f, i) && comp_[f * n + i] != f) neutral = false;
      if (composable(i, f) && comp_[i * n + f] != f) neutral = false;
    }
    if (neutral) identities_[obj] = i;
  }
  for (std::size_t o = 0; o < objects_.size(); ++o)
    if (identities_[o] == npos)
      throw PreconditionError("groupoid.identities",
                              "Groupoid: no identity at object \"" + objects_.label(o) + "\"");
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (composable(f, g) && composable(g, h) &&
            comp_[comp_[f * n + g] * n + h] != comp_[f * n + comp_[g * n + h]])
          throw PreconditionError("groupoid.associativity", "Groupoid: composition not associative");
  inverse_.assign(n, npos);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      if (composable(f, g) && composable(g, f) &&
          comp_[f * n + g] == identities_[tgt_.apply_index(f)] &&
          comp_[g * n + f] == identities_[src_.apply_index(f)])
        inverse_[f] = g;
  for (std::size_t f = 0; f < n; ++f)
    if (inverse_[f] == npos)
      throw PreconditionError("groupoid.inverses",
                              "Groupoid: \"" + morphisms_.label(f) + "\" has no inverse");
}

std::size_t Groupoid::compose_index(std::size_t f, std::size_t g) const {
  if (!composable(f, g)) throw ComposeError("Groupoid: morphisms not composable");
  return comp_[f * morphisms_.size() + g];
}

std::string Groupoid::compose(const std::string& f, const std::string& g) const {
  return morphisms_.label(compose_index(morphisms_.index_of(f), morphisms_.index_of(g)));
}

std::string Groupoid::inv(const std::string& f) const {
  return morphisms_.label(inverse_[morphisms_.index_of(f)]);
}

Groupoid groupoid_from_group(const Group& g) {
  FiniteSet objects({"*"});
  std::map<std::string, std::map<std::string, std::string>> comp;
  for (const auto& a : g.elements().labels())
    for (const auto& b : g.elements().labels()) comp[a][b] = g.mul(a, b);
  return Groupoid(objects, g.elements(), SetMap::constant(g.elements(), objects, "*"),
                  SetMap::constant(g.elements(), objects, "*"), comp);
}

Groupoid pair_groupoid(unsigned n) {
  if (n == 0) throw ParseError("pair_groupoid: need at least one object");
  std::vector<std::string> objs;
  for (unsigned i = 1; i <= n; ++i) objs.push_back(std::to_string(i));
  FiniteSet objects(objs);
  std::vector<std::string> morphs;
  for (const auto& i : objs)
    for (const auto& j : objs) morphs.push_back(pair_label(i, j));
  FiniteSet morphisms(morphs);
  std::map<std::string, std::string> src_a, tgt_a;
  for (const auto& i : objs)
    for (const auto& j : objs) {
      src_a[pair_label(i, j)] = i;  // "(i|j)" is the arrow i -> j
      tgt_a[pair_label(i, j)] = j;
    }
  std::map<std::string, std::map<std::string, std::string>> comp;
  for (const auto& i : objs)
    for (const auto& j : objs)
      for (const auto& k : objs)
        comp[pair_label(j, k)][pair_label(i, j)] = pair_label(i, k);
  return Groupoid(objects, morphisms, SetMap(morphisms, objects, src_a),
                  SetMap(morphisms, objects, tgt_a), comp);
}

TruncatedSS2 nerve_of_groupoid(const Groupoid& g) {
  const FiniteSet& X0 = g.objects();
  const FiniteSet& X1 = g.morphisms();
  // Composable pairs (f, g) with src(f) = tgt(g), labeled "f|g".
  std::vector<std::string> pair_labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t f = 0; f < X1.size(); ++f)
    for (std::size_t h = 0; h < X1.size(); ++h)
      if (g.composable(f, h)) {
        pair_labels.push_back(X1.label(f) + "|" + X1.label(h));
        pairs.emplace_back(f, h);
      }
  FiniteSet X2(pair_labels);
  std::vector<std::size_t> d0(X2.size()), d1(X2.size()), d2(X2.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::size_t z = X2.index_of(pair_labels[k]);
    d0[z] = pairs[k].second;
    d1[z] = g.compose_index(pairs[k].first, pairs[k].second);
    d2[z] = pairs[k].first;
  }
  std::vector<std::size_t> d1_0(X1.size()), d1_1(X1.size()), s0(X0.size());
  for (std::size_t f = 0; f < X1.size(); ++f) {
    d1_0[f] = g.src().apply_index(f);
    d1_1[f] = g.tgt().apply_index(f);
  }
  for (std::size_t o = 0; o < X0.size(); ++o) s0[o] = g.identity_at(o);
  std::vector<std::size_t> s1_0(X1.size()), s1_1(X1.size());
  for (std::size_t f = 0; f < X1.size(); ++f) {
    s1_0[f] = X2.index_of(X1.label(g.identity_at(g.tgt().apply_index(f))) + "|" + X1.label(f));
    s1_1[f] = X2.index_of(X1.label(f) + "|" + X1.label(g.identity_at(g.src().apply_index(f))));
  }
  return TruncatedSS2(X0, X1, X2, SetMap(X1, X0, std::move(d1_0)),
                      SetMap(X1, X0, std::move(d1_1)), SetMap(X2, X1, std::move(d0)),
                      SetMap(X2, X1, std::move(d1)), SetMap(X2, X1, std::move(d2)),
                      SetMap(X0, X1, std::move(s0)), SetMap(X1, X2, std::move(s1_0)),
                      SetMap(X1, X2, std::move(s1_1)));
}

FrobeniusDatum group_frobenius(const Group& g, const std::string& omega) {
  if (!g.elements().contains(omega))
    throw ParseError("group_frobenius: \"" + omega + "\" is not a group element");
  TruncatedSS2 nerve = nerve_of_groupoid(groupoid_from_group(g));
  SetMap alpha = SetMap::from_function(
      g.elements(), g.elements(), [&](const std::string& x) { return g.mul(g.inv(x), omega); });
  return FrobeniusDatum(std::move(nerve), std::move(alpha));
}

SetMap identity_section(const Groupoid& g) {
  std::vector<std::size_t> a(g.objects().size());
  for (std::size_t o = 0; o < g.objects().size(); ++o) a[o] = g.identity_at(o);
  return SetMap(g.objects(), g.morphisms(), std::move(a));
}

FrobeniusDatum groupoid_frobenius(const Groupoid& g, const SetMap& sigma) {
  if (sigma.dom() != g.objects() || sigma.cod() != g.morphisms())
    throw ParseError("groupoid_frobenius: sigma must map objects to morphisms");
  for (std::size_t o = 0; o < g.objects().size(); ++o)
    if (g.tgt().apply_index(sigma.apply_index(o)) != o)
      throw PreconditionError("section",
                              "groupoid_frobenius: sigma is not a section of the target map");
  TruncatedSS2 nerve = nerve_of_groupoid(g);
  std::vector<std::size_t> a(g.morphisms().size());
  for (std::size_t x = 0; x < g.morphisms().size(); ++x)
    a[x] = g.compose_index(g.inv_index(x), sigma.apply_index(g.tgt().apply_index(x)));
  return FrobeniusDatum(std::move(nerve), SetMap(g.morphisms(), g.morphisms(), std::move(a)));
}

TwoElementDatum two_element_family(unsigned n_bab, unsigned n_bbb, TwoElementAlpha alpha) {
  FiniteSet X0({"e"});
  FiniteSet X1({"a", "b"});
  // One 2-simplex per forced fiber, then the free fibers "bab" and "bbb".
  std::vector<std::string> labels = {"aaa", "bba", "abb"};
  std::vector<std::array<std::string, 3>> faces = {
      {"a", "a", "a"}, {"b", "b", "a"}, {"a", "b", "b"}};  // (d0, d1, d2)
  for (unsigned i = 0; i < n_bab; ++i) {
    labels.push_back(n_bab == 1 ? "bab" : "bab:" + std::to_string(i));
    faces.push_back({"b", "a", "b"});
  }
  for (unsigned i = 0; i < n_bbb; ++i) {
    labels.push_back(n_bbb == 1 ? "bbb" : "bbb:" + std::to_string(i));
    faces.push_back({"b", "b", "b"});
  }
  FiniteSet X2(labels);
  std::map<std::string, std::string> d0, d1, d2;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    d0[labels[k]] = faces[k][0];
    d1[labels[k]] = faces[k][1];
    d2[labels[k]] = faces[k][2];
  }
  TruncatedSS2 t(X0, X1, X2, SetMap::constant(X1, X0, "e"), SetMap::constant(X1, X0, "e"),
                 SetMap(X2, X1, d0), SetMap(X2, X1, d1), SetMap(X2, X1, d2),
                 SetMap(X0, X1, std::map<std::string, std::string>{{"e", "a"}}),
                 SetMap(X1, X2, std::map<std::string, std::string>{{"a", "aaa"}, {"b", "bba"}}),
                 SetMap(X1, X2, std::map<std::string, std::string>{{"a", "aaa"}, {"b", "abb"}}));
  SetMap alpha_map =
      alpha == TwoElementAlpha::id
          ? SetMap::identity(X1)
          : SetMap(X1, X1, std::map<std::string, std::string>{{"a", "b"}, {"b", "a"}});
  bool compatible = alpha == TwoElementAlpha::id ? (n_bab == 1) : (n_bbb == 0);
  return TwoElementDatum{FrobeniusDatum(std::move(t), std::move(alpha_map)), compatible};
}

}  // namespace frobspan
