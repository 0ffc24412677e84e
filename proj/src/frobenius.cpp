#include "frobspan/frobenius.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace frobspan {

FrobeniusDatum::FrobeniusDatum(TruncatedSS2 base_, SetMap alpha_hat_)
    : base(std::move(base_)), alpha_hat(std::move(alpha_hat_)) {
  if (alpha_hat.dom() != base.X1 || alpha_hat.cod() != base.X1)
    throw ParseError("FrobeniusDatum: alpha_hat must map X1 to X1");
  if (!alpha_hat.is_bijective())
    throw PreconditionError("alpha_hat_bijective", "FrobeniusDatum: alpha_hat is not a bijection");
  monoid_from_simplicial(base);  // throws if the monoid checks fail
}

bool check_nondegenerate(const Span& a) {
  if (a.dst.size() != 1)
    throw ParseError("check_nondegenerate: target must be a one-point set");
  // Recover the two factors of the product source.
  std::vector<std::string> firsts, seconds;
  for (const auto& label : a.src.labels()) {
    auto parts = split_pair_label(label);
    if (!parts) throw ParseError("check_nondegenerate: source is not a binary product");
    firsts.push_back(parts->first);
    seconds.push_back(parts->second);
  }
  std::sort(firsts.begin(), firsts.end());
  firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
  FiniteSet x(firsts);
  if (a.src != product(x, x))
    throw ParseError("check_nondegenerate: source is not a square product X×X");
  std::vector<std::size_t> comp1(a.apex.size()), comp2(a.apex.size());
  for (std::size_t i = 0; i < a.apex.size(); ++i) {
    auto parts = split_pair_label(a.src.label(a.left.apply_index(i)));
    comp1[i] = x.index_of(parts->first);
    comp2[i] = x.index_of(parts->second);
  }
  SetMap alpha1(a.apex, x, std::move(comp1));
  SetMap alpha2(a.apex, x, std::move(comp2));
  return alpha1.is_bijective() && alpha2.is_bijective();
}

Span eta_span(const FrobeniusDatum& f) { return monoid_spans(f.base).eta; }
Span mu_span(const FrobeniusDatum& f) { return monoid_spans(f.base).mu; }

Span counit_span(const FrobeniusDatum& f) {
  FiniteSet pt = FiniteSet::point();
  return Span(f.base.X1, pt, f.base.X0, f.base.s0.then(f.alpha_hat),
              SetMap::constant(f.base.X0, pt, "*"));
}

Span pairing_span(const FrobeniusDatum& f) {
  const FiniteSet& x1 = f.base.X1;
  FiniteSet pt = FiniteSet::point();
  return Span(product(x1, x1), pt, x1, pair_map(SetMap::identity(x1), f.alpha_hat),
              SetMap::constant(x1, pt, "*"));
}

Span copairing_span(const FrobeniusDatum& f) {
  const FiniteSet& x1 = f.base.X1;
  FiniteSet pt = FiniteSet::point();
  return Span(pt, product(x1, x1), x1, SetMap::constant(x1, pt, "*"),
              pair_map(f.alpha_hat, SetMap::identity(x1)));
}

FrobeniusReport check_frobenius(const FrobeniusDatum& f) {
  const TruncatedSS2& t = f.base;
  FrobeniusReport report;
  // Image of X0 under α̂∘s0: the 1-simplices supporting the counit.
  std::vector<bool> counit_support(t.X1.size(), false);
  for (std::size_t u = 0; u < t.X0.size(); ++u)
    counit_support[f.alpha_hat.apply_index(t.s0.apply_index(u))] = true;

  // Z = 2-simplices whose middle face lies in the counit support; gamma must
  // be the inverse of d2_2 restricted to Z.
  std::vector<std::optional<std::size_t>> gamma(t.X1.size());
  for (std::size_t z = 0; z < t.X2.size(); ++z) {
    if (!counit_support[t.d2_1.apply_index(z)]) continue;
    std::size_t x = t.d2_2.apply_index(z);
    if (gamma[x].has_value()) {
      report.failures.push_back({"frobenius.condition_2", t.X2.label(z),
                                 "second 2-simplex over \"" + t.X1.label(x) +
                                     "\" with counit-supported middle face"});
      continue;
    }
    if (t.d2_0.apply_index(z) != f.alpha_hat.apply_index(x)) {
      report.failures.push_back({"frobenius.condition_1", t.X2.label(z),
                                 "d0 face is \"" + t.X1.label(t.d2_0.apply_index(z)) +
                                     "\", expected alpha_hat(d2) = \"" +
                                     t.X1.label(f.alpha_hat.apply_index(x)) + "\""});
      continue;
    }
    gamma[x] = z;
  }
  for (std::size_t x = 0; x < t.X1.size(); ++x)
    if (!gamma[x].has_value() && report.failures.empty())
      report.failures.push_back({"frobenius.condition_1", t.X1.label(x),
                                 "no 2-simplex with faces (alpha_hat(x), counit support, x)"});
  if (!report.failures.empty()) return report;

  std::vector<std::size_t> assignment(t.X1.size());
  for (std::size_t x = 0; x < t.X1.size(); ++x) assignment[x] = *gamma[x];
  report.gamma = GammaWitness{SetMap(t.X1, t.X2, std::move(assignment))};
  return report;
}

Span comultiplication_span(const FrobeniusDatum& f) {
  if (!check_frobenius(f).ok())
    throw PreconditionError("frobenius", "comultiplication_span: datum is not Frobenius");
  const TruncatedSS2& t = f.base;
  return Span(t.X1, product(t.X1, t.X1), t.X2, t.d2_0,
              pair_map(t.d2_2.then(f.alpha_hat), t.d2_1));
}

bool check_commutative(const FrobeniusDatum& f) {
  const TruncatedSS2& t = f.base;
  std::map<std::array<std::size_t, 3>, long long> balance;
  for (std::size_t z = 0; z < t.X2.size(); ++z) {
    std::size_t i = t.d2_0.apply_index(z);
    std::size_t j = t.d2_1.apply_index(z);
    std::size_t k = t.d2_2.apply_index(z);
    ++balance[{i, j, k}];
    --balance[{k, j, i}];
  }
  for (const auto& [faces, diff] : balance)
    if (diff != 0) return false;
  return true;
}

bool check_symmetric(const FrobeniusDatum& f) {
  return f.alpha_hat.then(f.alpha_hat) == SetMap::identity(f.base.X1);
}

}  // namespace frobspan
