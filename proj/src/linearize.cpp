#include "frobspan/linearize.hpp"

namespace frobspan {

FrobeniusAlgebraPresentation linearize(const FrobeniusDatum& f) {
  if (!check_frobenius(f).ok())
    throw PreconditionError("frobenius", "linearize: datum is not Frobenius");
  const TruncatedSS2& t = f.base;
  const std::size_t n = t.X1.size();
  FrobeniusAlgebraPresentation p;
  p.basis = t.X1;
  p.mult.assign(n * n * n, 0);
  p.unit_vec.assign(n, 0);
  p.counit_vec.assign(n, 0);
  for (std::size_t z = 0; z < t.X2.size(); ++z)
    p.c(t.d2_0.apply_index(z), t.d2_2.apply_index(z), t.d2_1.apply_index(z)) += 1;
  for (std::size_t u = 0; u < t.X0.size(); ++u) {
    p.unit_vec[t.s0.apply_index(u)] = 1;
    p.counit_vec[f.alpha_hat.apply_index(t.s0.apply_index(u))] = 1;
  }
  return p;
}

NatMatrix gram_matrix(const FrobeniusAlgebraPresentation& p) {
  const std::size_t n = p.basis.size();
  NatMatrix b(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) b.at(x, y) += p.c(x, y, z) * p.counit_vec[z];
  return b;
}

std::vector<std::string> verify_frobenius_algebra(const FrobeniusAlgebraPresentation& p) {
  std::vector<std::string> out;
  const std::size_t n = p.basis.size();
  for (std::size_t x = 0; x < n && out.size() < 16; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t v = 0; v < n; ++v) {
          Nat lhs = 0, rhs = 0;
          for (std::size_t w = 0; w < n; ++w) {
            lhs += p.c(x, y, w) * p.c(w, z, v);
            rhs += p.c(y, z, w) * p.c(x, w, v);
          }
          if (lhs != rhs) {
            out.push_back("associativity fails at (" + p.basis.label(x) + ", " +
                          p.basis.label(y) + ", " + p.basis.label(z) + ") -> " +
                          p.basis.label(v));
            break;
          }
        }
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      Nat left = 0, right = 0;
      for (std::size_t x = 0; x < n; ++x) {
        left += p.unit_vec[x] * p.c(x, y, z);
        right += p.unit_vec[x] * p.c(y, x, z);
      }
      Nat expected = (y == z) ? 1 : 0;
      if (left != expected)
        out.push_back("left unit fails at " + p.basis.label(y));
      if (right != expected)
        out.push_back("right unit fails at " + p.basis.label(y));
    }
  if (determinant(gram_matrix(p)) == 0)
    out.push_back("bilinear form is degenerate (Gram determinant is 0)");
  return out;
}

FrobeniusAlgebraPresentation direct_sum(const FrobeniusAlgebraPresentation& a,
                                        const FrobeniusAlgebraPresentation& b) {
  bool collision = false;
  for (const auto& label : a.basis.labels())
    if (b.basis.contains(label)) collision = true;
  auto tag = [&](const std::string& prefix, const std::string& label) {
    return collision ? prefix + label : label;
  };
  std::vector<std::string> labels;
  for (const auto& l : a.basis.labels()) labels.push_back(tag("0:", l));
  for (const auto& l : b.basis.labels()) labels.push_back(tag("1:", l));
  FrobeniusAlgebraPresentation out;
  out.basis = FiniteSet(labels);
  const std::size_t n = out.basis.size();
  out.mult.assign(n * n * n, 0);
  out.unit_vec.assign(n, 0);
  out.counit_vec.assign(n, 0);
  auto copy_block = [&](const FrobeniusAlgebraPresentation& p, const std::string& prefix) {
    const std::size_t m = p.basis.size();
    for (std::size_t x = 0; x < m; ++x) {
      std::size_t xi = out.basis.index_of(tag(prefix, p.basis.label(x)));
      out.unit_vec[xi] = p.unit_vec[x];
      out.counit_vec[xi] = p.counit_vec[x];
      for (std::size_t y = 0; y < m; ++y) {
        std::size_t yi = out.basis.index_of(tag(prefix, p.basis.label(y)));
        for (std::size_t z = 0; z < m; ++z)
          out.c(xi, yi, out.basis.index_of(tag(prefix, p.basis.label(z)))) = p.c(x, y, z);
      }
    }
  };
  copy_block(a, "0:");
  copy_block(b, "1:");
  return out;
}

}  // namespace frobspan
