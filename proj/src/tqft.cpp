#include "frobspan/tqft.hpp"

namespace frobspan {

TransferMatrix transfer_matrix(const FrobeniusDatum& f) {
  Span handle = compose_spans(comultiplication_span(f), mu_span(f));
  return span_to_matrix(handle);
}

Nat partition_function(const FrobeniusDatum& f, unsigned genus) {
  TransferMatrix t = transfer_matrix(f);
  const TruncatedSS2& b = f.base;
  NatMatrix u(1, b.X1.size());
  for (std::size_t i = 0; i < b.X0.size(); ++i) u.at(0, b.s0.apply_index(i)) = 1;
  NatMatrix c(b.X1.size(), 1);
  for (std::size_t i = 0; i < b.X0.size(); ++i)
    c.at(f.alpha_hat.apply_index(b.s0.apply_index(i)), 0) = 1;
  return u.multiply(t.counts().pow(genus)).multiply(c).at(0, 0);
}

std::string GeneratorWord::to_string() const {
  switch (kind) {
    case Kind::unit: return "unit";
    case Kind::counit: return "counit";
    case Kind::mult: return "mult";
    case Kind::comult: return "comult";
    case Kind::id: return "id";
    case Kind::twist: return "twist";
    case Kind::compose:
    case Kind::tensor: {
      std::string out = kind == Kind::compose ? "compose(" : "tensor(";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) out += ", ";
        out += children[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

GeneratorWord genus_word(unsigned genus) {
  std::vector<GeneratorWord> parts;
  parts.push_back(GeneratorWord::leaf(GeneratorWord::Kind::counit));
  for (unsigned i = 0; i < genus; ++i)
    parts.push_back(GeneratorWord::compose_of({GeneratorWord::leaf(GeneratorWord::Kind::mult),
                                               GeneratorWord::leaf(GeneratorWord::Kind::comult)}));
  parts.push_back(GeneratorWord::leaf(GeneratorWord::Kind::unit));
  return GeneratorWord::compose_of(std::move(parts));
}

namespace {

struct TypedMatrix {
  unsigned dom, cod;  // powers of X1
  NatMatrix m;        // positional row-major tuple indexing
};

TypedMatrix evaluate(const FrobeniusDatum& f, const GeneratorWord& w) {
  const TruncatedSS2& t = f.base;
  const std::size_t n = t.X1.size();
  using Kind = GeneratorWord::Kind;
  switch (w.kind) {
    case Kind::unit: {
      NatMatrix m(1, n);
      for (std::size_t u = 0; u < t.X0.size(); ++u) m.at(0, t.s0.apply_index(u)) = 1;
      return {0, 1, std::move(m)};
    }
    case Kind::counit: {
      NatMatrix m(n, 1);
      for (std::size_t u = 0; u < t.X0.size(); ++u)
        m.at(f.alpha_hat.apply_index(t.s0.apply_index(u)), 0) = 1;
      return {1, 0, std::move(m)};
    }
    case Kind::mult: {
      NatMatrix m(n * n, n);
      for (std::size_t z = 0; z < t.X2.size(); ++z)
        m.at(t.d2_2.apply_index(z) * n + t.d2_0.apply_index(z), t.d2_1.apply_index(z)) += 1;
      return {2, 1, std::move(m)};
    }
    case Kind::comult: {
      NatMatrix m(n, n * n);
      for (std::size_t z = 0; z < t.X2.size(); ++z)
        m.at(t.d2_0.apply_index(z),
             f.alpha_hat.apply_index(t.d2_2.apply_index(z)) * n + t.d2_1.apply_index(z)) += 1;
      return {1, 2, std::move(m)};
    }
    case Kind::id:
      return {1, 1, NatMatrix::identity(n)};
    case Kind::twist: {
      NatMatrix m(n * n, n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i * n + j, j * n + i) = 1;
      return {2, 2, std::move(m)};
    }
    case Kind::compose: {
      if (w.children.empty())
        throw WordError(w.to_string(), "evaluate_word: empty composition");
      // Categorical order: the last child is applied first.
      TypedMatrix acc = evaluate(f, w.children.back());
      for (std::size_t i = w.children.size() - 1; i-- > 0;) {
        TypedMatrix next = evaluate(f, w.children[i]);
        if (acc.cod != next.dom)
          throw WordError(w.children[i].to_string(),
                          "evaluate_word: composition boundary mismatch (X^" +
                              std::to_string(acc.cod) + " against X^" +
                              std::to_string(next.dom) + ")");
        acc = {acc.dom, next.cod, acc.m.multiply(next.m)};
      }
      return acc;
    }
    case Kind::tensor: {
      if (w.children.empty())
        throw WordError(w.to_string(), "evaluate_word: empty tensor");
      TypedMatrix acc = evaluate(f, w.children.front());
      for (std::size_t i = 1; i < w.children.size(); ++i) {
        TypedMatrix next = evaluate(f, w.children[i]);
        acc = {acc.dom + next.dom, acc.cod + next.cod, acc.m.kronecker(next.m)};
      }
      return acc;
    }
  }
  throw WordError(w.to_string(), "evaluate_word: unknown node");
}

// Tuple labels of X1^k in positional (row-major) order, as left-nested pairs.
std::vector<std::string> power_labels(const FiniteSet& x1, unsigned k) {
  std::vector<std::string> out = {"*"};
  for (unsigned level = 0; level < k; ++level) {
    std::vector<std::string> next;
    next.reserve(out.size() * x1.size());
    for (const auto& prefix : out)
      for (const auto& l : x1.labels())
        next.push_back(level == 0 ? l : pair_label(prefix, l));
    out = std::move(next);
  }
  return out;
}

FiniteSet power_set(const FiniteSet& x1, unsigned k) {
  if (k == 0) return FiniteSet::point();
  FiniteSet s = x1;
  for (unsigned level = 1; level < k; ++level) s = product(s, x1);
  return s;
}

}  // namespace

MultiplicityMatrix evaluate_word(const FrobeniusDatum& f, const GeneratorWord& w) {
  if (!check_frobenius(f).ok())
    throw PreconditionError("frobenius", "evaluate_word: datum is not Frobenius");
  TypedMatrix r = evaluate(f, w);
  FiniteSet src = power_set(f.base.X1, r.dom);
  FiniteSet dst = power_set(f.base.X1, r.cod);
  std::vector<std::string> row_labels = power_labels(f.base.X1, r.dom);
  std::vector<std::string> col_labels = power_labels(f.base.X1, r.cod);
  MultiplicityMatrix out(src, dst);
  for (std::size_t i = 0; i < r.m.rows(); ++i)
    for (std::size_t j = 0; j < r.m.cols(); ++j)
      if (r.m.at(i, j) != 0)
        out.ref(src.index_of(row_labels[i]), dst.index_of(col_labels[j])) = r.m.at(i, j);
  return out;
}

}  // namespace frobspan
