#include "frobspan/simplicial.hpp"

#include <map>
#include <optional>

namespace frobspan {

TruncatedSS2::TruncatedSS2(FiniteSet X0_, FiniteSet X1_, FiniteSet X2_, SetMap d1_0_,
                           SetMap d1_1_, SetMap d2_0_, SetMap d2_1_, SetMap d2_2_, SetMap s0_,
                           SetMap s1_0_, SetMap s1_1_)
    : X0(std::move(X0_)),
      X1(std::move(X1_)),
      X2(std::move(X2_)),
      d1_0(std::move(d1_0_)),
      d1_1(std::move(d1_1_)),
      d2_0(std::move(d2_0_)),
      d2_1(std::move(d2_1_)),
      d2_2(std::move(d2_2_)),
      s0(std::move(s0_)),
      s1_0(std::move(s1_0_)),
      s1_1(std::move(s1_1_)) {
  auto expect = [](const SetMap& m, const FiniteSet& dom, const FiniteSet& cod,
                   const char* name) {
    if (m.dom() != dom || m.cod() != cod)
      throw ParseError(std::string("TruncatedSS2: map ") + name + " has wrong endpoints");
  };
  expect(d1_0, X1, X0, "d1_0");
  expect(d1_1, X1, X0, "d1_1");
  expect(d2_0, X2, X1, "d2_0");
  expect(d2_1, X2, X1, "d2_1");
  expect(d2_2, X2, X1, "d2_2");
  expect(s0, X0, X1, "s0");
  expect(s1_0, X1, X2, "s1_0");
  expect(s1_1, X1, X2, "s1_1");
}

namespace {

void check_equal_maps(std::vector<Violation>& out, const SetMap& a, const SetMap& b,
                      const std::string& rule) {
  for (std::size_t i = 0; i < a.dom().size(); ++i)
    if (a.apply_index(i) != b.apply_index(i))
      out.push_back({rule, a.dom().label(i),
                     a.cod().label(a.apply_index(i)) + " != " + b.cod().label(b.apply_index(i))});
}

void check_identity_map(std::vector<Violation>& out, const SetMap& a, const std::string& rule) {
  for (std::size_t i = 0; i < a.dom().size(); ++i)
    if (a.apply_index(i) != i)
      out.push_back({rule, a.dom().label(i), "maps to " + a.cod().label(a.apply_index(i))});
}

}  // namespace

std::vector<Violation> validate_truncated(const TruncatedSS2& t) {
  std::vector<Violation> out;
  // Two-face identities on 2-simplices.
  check_equal_maps(out, t.d2_1.then(t.d1_0), t.d2_0.then(t.d1_0), "d1_0.d2_1 = d1_0.d2_0");
  check_equal_maps(out, t.d2_2.then(t.d1_0), t.d2_0.then(t.d1_1), "d1_0.d2_2 = d1_1.d2_0");
  check_equal_maps(out, t.d2_2.then(t.d1_1), t.d2_1.then(t.d1_1), "d1_1.d2_2 = d1_1.d2_1");
  // Degeneracy-degeneracy identity.
  check_equal_maps(out, t.s0.then(t.s1_0), t.s0.then(t.s1_1), "s1_0.s0 = s1_1.s0");
  // Face-degeneracy identities at level 0.
  check_identity_map(out, t.s0.then(t.d1_0), "d1_0.s0 = id");
  check_identity_map(out, t.s0.then(t.d1_1), "d1_1.s0 = id");
  // Face-degeneracy identities at level 1.
  check_identity_map(out, t.s1_0.then(t.d2_0), "d2_0.s1_0 = id");
  check_identity_map(out, t.s1_0.then(t.d2_1), "d2_1.s1_0 = id");
  check_equal_maps(out, t.s1_0.then(t.d2_2), t.d1_1.then(t.s0), "d2_2.s1_0 = s0.d1_1");
  check_equal_maps(out, t.s1_1.then(t.d2_0), t.d1_0.then(t.s0), "d2_0.s1_1 = s0.d1_0");
  check_identity_map(out, t.s1_1.then(t.d2_1), "d2_1.s1_1 = id");
  check_identity_map(out, t.s1_1.then(t.d2_2), "d2_2.s1_1 = id");
  return out;
}

std::vector<Violation> unit_condition_violations(const TruncatedSS2& t) {
  std::vector<Violation> out;
  std::vector<bool> in_s0(t.X1.size(), false);
  for (std::size_t u = 0; u < t.X0.size(); ++u) in_s0[t.s0.apply_index(u)] = true;
  std::vector<bool> in_s1_0(t.X2.size(), false), in_s1_1(t.X2.size(), false);
  for (std::size_t x = 0; x < t.X1.size(); ++x) {
    in_s1_0[t.s1_0.apply_index(x)] = true;
    in_s1_1[t.s1_1.apply_index(x)] = true;
  }
  for (std::size_t z = 0; z < t.X2.size(); ++z) {
    if (in_s0[t.d2_2.apply_index(z)] && !in_s1_0[z])
      out.push_back({"unit.condition_1", t.X2.label(z),
                     "d2 face is degenerate but the simplex is not in im(s1_0)"});
    if (in_s0[t.d2_0.apply_index(z)] && !in_s1_1[z])
      out.push_back({"unit.condition_2", t.X2.label(z),
                     "d0 face is degenerate but the simplex is not in im(s1_1)"});
  }
  return out;
}

bool check_unit_conditions(const TruncatedSS2& t) {
  return unit_condition_violations(t).empty();
}

TacoSet taco_set(const TruncatedSS2& t, TacoFlavor flavor) {
  TacoSet out{flavor, {}};
  const SetMap& second = (flavor == TacoFlavor::t02) ? t.d2_0 : t.d2_2;
  for (std::size_t z = 0; z < t.X2.size(); ++z)
    for (std::size_t w = 0; w < t.X2.size(); ++w)
      if (t.d2_1.apply_index(z) == second.apply_index(w))
        out.pairs.emplace_back(t.X2.label(z), t.X2.label(w));
  return out;
}

CompatQuad boundary_quad(const TruncatedSS2& t,
                         const std::pair<std::string, std::string>& taco, TacoFlavor flavor) {
  std::size_t z = t.X2.index_of(taco.first);
  std::size_t w = t.X2.index_of(taco.second);
  auto face = [&](const SetMap& d, std::size_t i) { return t.X1.label(d.apply_index(i)); };
  if (flavor == TacoFlavor::t02) {
    if (t.d2_1.apply_index(z) != t.d2_0.apply_index(w))
      throw PreconditionError("taco", "boundary_quad: pair is not a 02-taco");
    return {face(t.d2_2, w), face(t.d2_2, z), face(t.d2_0, z), face(t.d2_1, w)};
  }
  if (t.d2_1.apply_index(z) != t.d2_2.apply_index(w))
    throw PreconditionError("taco", "boundary_quad: pair is not a 13-taco");
  return {face(t.d2_2, z), face(t.d2_0, z), face(t.d2_0, w), face(t.d2_1, w)};
}

std::vector<CompatQuad> compat_quads(const TruncatedSS2& t) {
  std::vector<CompatQuad> out;
  const std::size_t n = t.X1.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (t.d1_0.apply_index(a) != t.d1_1.apply_index(b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (t.d1_0.apply_index(b) != t.d1_1.apply_index(c)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (t.d1_0.apply_index(c) != t.d1_0.apply_index(d)) continue;
          if (t.d1_1.apply_index(d) != t.d1_1.apply_index(a)) continue;
          out.push_back({t.X1.label(a), t.X1.label(b), t.X1.label(c), t.X1.label(d)});
        }
      }
    }
  return out;
}

bool check_associativity_fibers(const TruncatedSS2& t) {
  std::map<CompatQuad, long long> balance;
  for (const auto& p : taco_set(t, TacoFlavor::t02).pairs)
    ++balance[boundary_quad(t, p, TacoFlavor::t02)];
  for (const auto& p : taco_set(t, TacoFlavor::t13).pairs)
    --balance[boundary_quad(t, p, TacoFlavor::t13)];
  for (const auto& [quad, diff] : balance)
    if (diff != 0) return false;
  return true;
}

MonoidSpans monoid_spans(const TruncatedSS2& t) {
  FiniteSet pt = FiniteSet::point();
  Span eta(pt, t.X1, t.X0, SetMap::constant(t.X0, pt, "*"), t.s0);
  Span mu(product(t.X1, t.X1), t.X1, t.X2, pair_map(t.d2_2, t.d2_0), t.d2_1);
  return {std::move(eta), std::move(mu)};
}

MonoidSpans monoid_from_simplicial(const TruncatedSS2& t) {
  if (!validate_truncated(t).empty())
    throw PreconditionError("simplicial_identities",
                            "monoid_from_simplicial: simplicial identities fail");
  if (!check_unit_conditions(t))
    throw PreconditionError("unit_conditions",
                            "monoid_from_simplicial: unit conditions fail");
  if (!check_associativity_fibers(t))
    throw PreconditionError("associativity_fibers",
                            "monoid_from_simplicial: associativity fiber counts differ");
  return monoid_spans(t);
}

bool monoid_axioms_hold(const Span& eta, const Span& mu) {
  const FiniteSet& x = mu.dst;
  if (eta.src != FiniteSet::point() || eta.dst != x || mu.src != product(x, x))
    throw ParseError("monoid_axioms_hold: spans do not have monoid shape");
  Span id_x = identity_span(x);
  // Unit axioms, compared against the unitor projections.
  Span left = compose_spans(tensor_spans(eta, id_x), mu);
  if (!spans_isomorphic(left, left_unitor_span(x))) return false;
  Span right = compose_spans(tensor_spans(id_x, eta), mu);
  if (!spans_isomorphic(right, right_unitor_span(x))) return false;
  // Associativity, mediated by the associator.
  Span lhs = compose_spans(tensor_spans(mu, id_x), mu);
  Span rhs = compose_spans(tensor_spans(id_x, mu), mu);
  return spans_isomorphic(lhs, compose_spans(associator_span(x, x, x), rhs));
}

TruncatedSS2 simplicial_from_monoid(const FiniteSet& E, const SetMap& s0, const FiniteSet& M,
                                    const SetMap& d0, const SetMap& d1, const SetMap& d2) {
  const FiniteSet& X = s0.cod();
  if (s0.dom() != E || d0.dom() != M || d1.dom() != M || d2.dom() != M || d0.cod() != X ||
      d1.cod() != X || d2.cod() != X)
    throw ParseError("simplicial_from_monoid: maps do not have the expected endpoints");

  FiniteSet pt = FiniteSet::point();
  Span eta(pt, X, E, SetMap::constant(E, pt, "*"), s0);
  Span mu(product(X, X), X, M, pair_map(d2, d0), d1);
  if (!monoid_axioms_hold(eta, mu))
    throw PreconditionError("monoid", "simplicial_from_monoid: data is not a monoid");

  std::vector<std::optional<std::size_t>> s0_preimage(X.size());
  for (std::size_t u = 0; u < E.size(); ++u) s0_preimage[s0.apply_index(u)] = u;

  // The unit-axiom bijections pick out, for each 1-simplex x, the unique
  // 2-simplices filling (x, unit) and (unit, x); faces of those fillers give
  // the missing vertex maps.
  std::vector<std::size_t> s1_1_a(X.size()), d1_0_a(X.size());
  std::vector<std::size_t> s1_0_a(X.size()), d1_1_a(X.size());
  for (std::size_t x = 0; x < X.size(); ++x) {
    std::optional<std::size_t> right_filler, left_filler;
    for (std::size_t m = 0; m < M.size(); ++m) {
      if (d2.apply_index(m) == x && d1.apply_index(m) == x &&
          s0_preimage[d0.apply_index(m)].has_value()) {
        if (right_filler)
          throw PreconditionError("monoid", "simplicial_from_monoid: unit filler for \"" +
                                                X.label(x) + "\" is not unique");
        right_filler = m;
      }
      if (d0.apply_index(m) == x && d1.apply_index(m) == x &&
          s0_preimage[d2.apply_index(m)].has_value()) {
        if (left_filler)
          throw PreconditionError("monoid", "simplicial_from_monoid: unit filler for \"" +
                                                X.label(x) + "\" is not unique");
        left_filler = m;
      }
    }
    if (!right_filler || !left_filler)
      throw PreconditionError("monoid", "simplicial_from_monoid: no unit filler for \"" +
                                            X.label(x) + "\"");
    s1_1_a[x] = *right_filler;
    d1_0_a[x] = *s0_preimage[d0.apply_index(*right_filler)];
    s1_0_a[x] = *left_filler;
    d1_1_a[x] = *s0_preimage[d2.apply_index(*left_filler)];
  }

  TruncatedSS2 t(E, X, M, SetMap(X, E, std::move(d1_0_a)), SetMap(X, E, std::move(d1_1_a)), d0,
                 d1, d2, s0, SetMap(X, M, std::move(s1_0_a)), SetMap(X, M, std::move(s1_1_a)));
  if (!validate_truncated(t).empty())
    throw Error("simplicial_from_monoid: assembled structure fails the simplicial identities");
  return t;
}

}  // namespace frobspan
