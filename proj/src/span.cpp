#include "frobspan/span.hpp"

namespace frobspan {

MultiplicityMatrix::MultiplicityMatrix(FiniteSet src, FiniteSet dst, NatMatrix counts)
    : src_(std::move(src)), dst_(std::move(dst)), counts_(std::move(counts)) {
  if (counts_.rows() != src_.size() || counts_.cols() != dst_.size())
    throw ParseError("MultiplicityMatrix: count dimensions do not match sets");
}

MultiplicityMatrix MultiplicityMatrix::identity(const FiniteSet& x) {
  return MultiplicityMatrix(x, x, NatMatrix::identity(x.size()));
}

MultiplicityMatrix MultiplicityMatrix::multiply(const MultiplicityMatrix& o) const {
  if (dst_ != o.src_)
    throw ComposeError("MultiplicityMatrix::multiply: middle sets differ");
  return MultiplicityMatrix(src_, o.dst_, counts_.multiply(o.counts_));
}

MultiplicityMatrix MultiplicityMatrix::kronecker(const MultiplicityMatrix& o) const {
  FiniteSet psrc = product(src_, o.src_);
  FiniteSet pdst = product(dst_, o.dst_);
  MultiplicityMatrix out(psrc, pdst);
  for (std::size_t i = 0; i < src_.size(); ++i)
    for (std::size_t j = 0; j < dst_.size(); ++j) {
      const Nat& a = counts_.at(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < o.src_.size(); ++k)
        for (std::size_t l = 0; l < o.dst_.size(); ++l) {
          const Nat& b = o.counts_.at(k, l);
          if (b == 0) continue;
          std::size_t r = psrc.index_of(pair_label(src_.label(i), o.src_.label(k)));
          std::size_t c = pdst.index_of(pair_label(dst_.label(j), o.dst_.label(l)));
          out.counts_.at(r, c) = a * b;
        }
    }
  return out;
}

MultiplicityMatrix MultiplicityMatrix::pow(unsigned long e) const {
  if (src_ != dst_) throw ComposeError("MultiplicityMatrix::pow: matrix not square");
  return MultiplicityMatrix(src_, dst_, counts_.pow(e));
}

Span::Span(FiniteSet src_, FiniteSet dst_, FiniteSet apex_, SetMap left_, SetMap right_)
    : src(std::move(src_)),
      dst(std::move(dst_)),
      apex(std::move(apex_)),
      left(std::move(left_)),
      right(std::move(right_)) {
  if (left.dom() != apex || right.dom() != apex)
    throw ParseError("Span: legs must be defined on the apex");
  if (left.cod() != src) throw ParseError("Span: left leg must land in src");
  if (right.cod() != dst) throw ParseError("Span: right leg must land in dst");
}

Span identity_span(const FiniteSet& x) {
  return Span(x, x, x, SetMap::identity(x), SetMap::identity(x));
}

Span compose_spans(const Span& f, const Span& g) {
  if (f.dst != g.src)
    throw ComposeError("compose_spans: target of first span differs from source of second");
  std::vector<std::string> apex_labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < f.apex.size(); ++a)
    for (std::size_t b = 0; b < g.apex.size(); ++b)
      if (f.right.apply_index(a) == g.left.apply_index(b)) {
        apex_labels.push_back(pair_label(f.apex.label(a), g.apex.label(b)));
        pairs.emplace_back(a, b);
      }
  FiniteSet apex(apex_labels);
  std::vector<std::size_t> left(apex.size()), right(apex.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::size_t i = apex.index_of(apex_labels[k]);
    left[i] = f.left.apply_index(pairs[k].first);
    right[i] = g.right.apply_index(pairs[k].second);
  }
  return Span(f.src, g.dst, apex, SetMap(apex, f.src, std::move(left)),
              SetMap(apex, g.dst, std::move(right)));
}

Span tensor_spans(const Span& f, const Span& g) {
  return Span(product(f.src, g.src), product(f.dst, g.dst), product(f.apex, g.apex),
              product_map(f.left, g.left), product_map(f.right, g.right));
}

MultiplicityMatrix span_to_matrix(const Span& s) {
  MultiplicityMatrix m(s.src, s.dst);
  for (std::size_t a = 0; a < s.apex.size(); ++a)
    m.ref(s.left.apply_index(a), s.right.apply_index(a)) += 1;
  return m;
}

bool spans_isomorphic(const Span& s, const Span& t) {
  return s.src == t.src && s.dst == t.dst && span_to_matrix(s) == span_to_matrix(t);
}

bool is_isomorphism_span(const Span& s) {
  return s.left.is_bijective() && s.right.is_bijective();
}

Span twist_span(const FiniteSet& x) {
  FiniteSet xx = product(x, x);
  std::vector<std::size_t> swap(xx.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      swap[xx.index_of(pair_label(x.label(i), x.label(j)))] =
          xx.index_of(pair_label(x.label(j), x.label(i)));
  return Span(xx, xx, xx, SetMap(xx, xx, std::move(swap)), SetMap::identity(xx));
}

Span reverse_span(const Span& s) { return Span(s.dst, s.src, s.apex, s.right, s.left); }

Span span_of_map(const SetMap& f) {
  return Span(f.dom(), f.cod(), f.dom(), SetMap::identity(f.dom()), f);
}

Span left_unitor_span(const FiniteSet& x) {
  FiniteSet pt = FiniteSet::point();
  FiniteSet px = product(pt, x);
  std::vector<std::size_t> proj(px.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    proj[px.index_of(pair_label("*", x.label(i)))] = i;
  return Span(px, x, px, SetMap::identity(px), SetMap(px, x, std::move(proj)));
}

Span right_unitor_span(const FiniteSet& x) {
  FiniteSet pt = FiniteSet::point();
  FiniteSet xp = product(x, pt);
  std::vector<std::size_t> proj(xp.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    proj[xp.index_of(pair_label(x.label(i), "*"))] = i;
  return Span(xp, x, xp, SetMap::identity(xp), SetMap(xp, x, std::move(proj)));
}

Span associator_span(const FiniteSet& x, const FiniteSet& y, const FiniteSet& z) {
  FiniteSet lhs = product(product(x, y), z);
  FiniteSet rhs = product(x, product(y, z));
  std::vector<std::size_t> reassoc(lhs.size());
  for (const auto& a : x.labels())
    for (const auto& b : y.labels())
      for (const auto& c : z.labels())
        reassoc[lhs.index_of(pair_label(pair_label(a, b), c))] =
            rhs.index_of(pair_label(a, pair_label(b, c)));
  return Span(lhs, rhs, lhs, SetMap::identity(lhs), SetMap(lhs, rhs, std::move(reassoc)));
}

}  // namespace frobspan
