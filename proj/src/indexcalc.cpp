#include "nilcent/indexcalc.hpp"

#include <algorithm>

namespace nilcent {

Vec restrict_covector(const Vec& alpha, const Subalgebra& s) {
  Vec out(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) out[r] = dot(alpha, s.element(r));
  return out;
}

PolyMat kirillov_matrix(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  PolyMat b(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      MultiPoly p(n);
      for (const auto& [w, c] : g.structure(u, v)) p = p + MultiPoly::variable(n, w, c);
      b(u, v) = std::move(p);
    }
  return b;
}

QMat kirillov_at(const LieAlgebra& g, const Vec& alpha) {
  const std::size_t n = g.dim();
  if (alpha.size() != n) throw DimensionError("kirillov_at: covector has the wrong size");
  QMat b(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      Scalar s = 0;
      for (const auto& [w, c] : g.structure(u, v)) s += c * alpha[w];
      b(u, v) = s;
      b(v, u) = -s;
    }
  return b;
}

namespace {

// rank of B(s) restricted to the columns outside `in_slice` equals their count
bool transversal_at(const LieAlgebra& g, const std::vector<bool>& in_slice, const Vec& s) {
  const QMat b = kirillov_at(g, s);
  std::vector<std::size_t> cols;
  for (std::size_t w = 0; w < g.dim(); ++w)
    if (!in_slice[w]) cols.push_back(w);
  QMat sub(g.dim(), cols.size());
  for (std::size_t r = 0; r < g.dim(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = b(r, cols[c]);
  return rank(sub) == cols.size();
}

Vec point_on(const std::vector<bool>& in_slice, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-97, 97);
  Vec s(in_slice.size());
  for (std::size_t w = 0; w < s.size(); ++w)
    if (in_slice[w]) {
      long v = 0;
      while (v == 0) v = dist(rng);
      s[w] = v;
    }
  return s;
}

}  // namespace

TransversalSlice transversal_slice(const LieAlgebra& g, std::uint64_t seed) {
  const std::size_t n = g.dim();
  std::mt19937_64 rng(seed);
  std::vector<bool> in_slice(n, true);
  Vec witness = point_on(in_slice, rng);
  // Greedy shrinking. A random miss only leaves a coordinate in the slice;
  // it never produces an invalid certificate.
  for (std::size_t w = n; w-- > 0;) {
    in_slice[w] = false;
    const Vec s = point_on(in_slice, rng);
    if (transversal_at(g, in_slice, s)) {
      witness = s;
    } else {
      in_slice[w] = true;
    }
  }
  TransversalSlice out;
  for (std::size_t w = 0; w < n; ++w)
    if (in_slice[w]) out.coords.push_back(w);
  out.witness = std::move(witness);
  return out;
}

bool slice_is_transversal(const LieAlgebra& g, const TransversalSlice& slice) {
  std::vector<bool> in_slice(g.dim(), false);
  for (auto w : slice.coords) in_slice.at(w) = true;
  if (slice.witness.size() != g.dim()) return false;
  for (std::size_t w = 0; w < g.dim(); ++w)
    if (!in_slice[w] && sgn(slice.witness[w]) != 0) return false;
  return transversal_at(g, in_slice, slice.witness);
}

PolyMat restricted_kirillov(const LieAlgebra& g, const std::vector<std::size_t>& coords) {
  const std::size_t n = g.dim();
  const std::size_t m = coords.size();
  std::vector<std::size_t> var(n, m);
  for (std::size_t k = 0; k < m; ++k) var.at(coords[k]) = k;
  PolyMat b(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      MultiPoly p(m);
      for (const auto& [w, c] : g.structure(u, v))
        if (var[w] < m) p = p + MultiPoly::variable(m, var[w], c);
      b(u, v) = std::move(p);
    }
  return b;
}

IndexCertificate index_certificate(const LieAlgebra& g) {
  IndexCertificate cert;
  if (g.dim() == 0) return cert;
  cert.slice = transversal_slice(g);
  if (!slice_is_transversal(g, cert.slice)) throw std::logic_error("index: slice certificate does not verify");
  cert.generic_rank = generic_rank(restricted_kirillov(g, cert.slice.coords));
  cert.index = g.dim() - cert.generic_rank;
  return cert;
}

std::size_t index(const LieAlgebra& g) { return index_certificate(g).index; }

std::size_t index_unreduced(const LieAlgebra& g) {
  if (g.dim() == 0) return 0;
  return g.dim() - generic_rank(kirillov_matrix(g));
}

std::size_t sampled_index(const LieAlgebra& g, std::size_t samples, std::mt19937_64& rng, long bound) {
  std::size_t best = 0;
  for (std::size_t k = 0; k < samples; ++k) best = std::max(best, rank(kirillov_at(g, random_point(g.dim(), rng, bound))));
  return g.dim() - best;
}

Subalgebra stabilizer(const AlgebraPtr& g, const Vec& alpha) {
  Subalgebra out(g, kernel_basis(kirillov_at(*g, alpha)));
  if (!out.is_closed()) throw std::logic_error("stabilizer: kernel of B(alpha) is not closed in " + g->name());
  return out;
}

std::size_t restricted_form_kernel(const Covector& gamma, const Subalgebra& h0, const Subalgebra& h1,
                                   std::vector<Vec>* kernel) {
  const LieAlgebra& g = h1.parent();
  if (h0.parent_ptr() != h1.parent_ptr() || gamma.algebra != h1.parent_ptr())
    throw std::invalid_argument("restricted_form_kernel: pieces live in different algebras");
  if (intersect(h0, h1).dim() != 0) throw std::invalid_argument("restricted_form_kernel: h0 and h1 intersect");
  const auto e0 = h0.elements();
  const auto e1 = h1.elements();
  for (const auto& x : e0)
    for (const auto& y : e1)
      if (!h1.contains(g.bracket(x, y))) throw std::invalid_argument("restricted_form_kernel: [h0, h1] not in h1");
  for (std::size_t a = 0; a < e1.size(); ++a)
    for (std::size_t b = a + 1; b < e1.size(); ++b)
      if (!h0.contains(g.bracket(e1[a], e1[b]))) throw std::invalid_argument("restricted_form_kernel: [h1, h1] not in h0");
  for (const auto& y : e1)
    if (sgn(gamma(y)) != 0) throw std::invalid_argument("restricted_form_kernel: gamma does not vanish on h1");

  QMat form(e1.size(), e1.size());
  for (std::size_t a = 0; a < e1.size(); ++a)
    for (std::size_t b = a + 1; b < e1.size(); ++b) {
      form(a, b) = gamma(g.bracket(e1[a], e1[b]));
      form(b, a) = -form(a, b);
    }
  const auto ker = kernel_basis(form);
  if (kernel) {
    kernel->clear();
    for (const auto& coeffs : ker) {
      Vec x(g.dim());
      for (std::size_t a = 0; a < e1.size(); ++a)
        if (sgn(coeffs[a]) != 0)
          for (std::size_t c = 0; c < x.size(); ++c) x[c] += coeffs[a] * e1[a][c];
      kernel->push_back(std::move(x));
    }
  }
  return ker.size();
}

bool vinberg_check(const LieAlgebra& g, const LieAlgebra& sub) { return index(sub) >= index(g); }

}  // namespace nilcent
