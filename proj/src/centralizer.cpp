#include "nilcent/centralizer.hpp"

#include <algorithm>

namespace nilcent {

std::string label(const BasisElt& x) {
  return "xi_" + std::to_string(x.i + 1) + "^{" + std::to_string(x.j + 1) + "," + std::to_string(x.s) + "}";
}

bool in_range(const Partition& p, const BasisElt& x) {
  if (x.i < 0 || x.j < 0 || static_cast<std::size_t>(x.i) >= p.k() || static_cast<std::size_t>(x.j) >= p.k())
    return false;
  const int di = p.d(static_cast<std::size_t>(x.i));
  const int dj = p.d(static_cast<std::size_t>(x.j));
  return std::max(0, dj - di) <= x.s && x.s <= dj;
}

std::vector<BasisElt> gl_centralizer_basis(const Partition& p) {
  std::vector<BasisElt> out;
  const int k = static_cast<int>(p.k());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int s = 0; s <= p.d(static_cast<std::size_t>(j)); ++s)
        if (in_range(p, {i, j, s})) out.push_back({i, j, s});
  return out;
}

std::size_t gl_centralizer_dimension(const Partition& p) {
  std::size_t total = 0;
  for (int a : p.sizes())
    for (int b : p.sizes()) total += static_cast<std::size_t>(std::min(a, b));
  return total;
}

QMat realise(const Partition& p, const BasisElt& x) {
  if (!in_range(p, x)) throw std::out_of_range("realise: " + label(x) + " is out of range");
  const auto n = static_cast<std::size_t>(p.n());
  QMat m(n, n);
  const auto i = static_cast<std::size_t>(x.i), j = static_cast<std::size_t>(x.j);
  // e^a w_i -> e^{a+s} w_j
  for (int a = 0; a <= p.d(i) && a + x.s <= p.d(j); ++a) m(p.position(j, a + x.s), p.position(i, a)) = 1;
  return m;
}

QMat realise(const Partition& p, const CoeffTable& phi) {
  const auto n = static_cast<std::size_t>(p.n());
  QMat m(n, n);
  for (const auto& [x, c] : phi) {
    if (!in_range(p, x)) throw std::out_of_range("realise: " + label(x) + " is out of range");
    const auto i = static_cast<std::size_t>(x.i), j = static_cast<std::size_t>(x.j);
    for (int a = 0; a <= p.d(i) && a + x.s <= p.d(j); ++a) m(p.position(j, a + x.s), p.position(i, a)) += c;
  }
  return m;
}

CoeffTable coefficients(const QMat& phi, const Partition& p) {
  const auto n = static_cast<std::size_t>(p.n());
  if (phi.rows() != n || phi.cols() != n) throw DimensionError("coefficients: matrix has the wrong shape");
  const QMat e = build_nilpotent(p);
  if (!(phi * e == e * phi)) throw NotInCentralizer("coefficients: matrix does not commute with e");
  CoeffTable out;
  for (std::size_t i = 0; i < p.k(); ++i)
    for (std::size_t j = 0; j < p.k(); ++j)
      for (int s = 0; s <= p.d(j); ++s) {
        const Scalar& c = phi(p.position(j, s), p.position(i, 0));
        if (sgn(c) == 0) continue;
        const BasisElt x{static_cast<int>(i), static_cast<int>(j), s};
        if (!in_range(p, x)) throw NotInCentralizer("coefficients: image of w_i leaves the allowed range");
        out.emplace(x, c);
      }
  return out;
}

void add_scaled(CoeffTable& acc, const CoeffTable& x, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (const auto& [key, v] : x) {
    auto [it, inserted] = acc.try_emplace(key, 0);
    it->second += c * v;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

CoeffTable operator+(const CoeffTable& a, const CoeffTable& b) {
  CoeffTable out = a;
  add_scaled(out, b, 1);
  return out;
}

CoeffTable operator-(const CoeffTable& a, const CoeffTable& b) {
  CoeffTable out = a;
  add_scaled(out, b, -1);
  return out;
}

CoeffTable compose(const CoeffTable& a, const CoeffTable& b, const Partition& p) {
  // Index the outer factor by its source block.
  std::map<int, std::vector<std::pair<BasisElt, Scalar>>> by_source;
  for (const auto& [x, c] : a) by_source[x.i].emplace_back(x, c);
  CoeffTable out;
  for (const auto& [inner, cb] : b) {
    const auto it = by_source.find(inner.j);
    if (it == by_source.end()) continue;
    for (const auto& [outer, ca] : it->second) {
      const int shift = outer.s + inner.s;
      if (shift > p.d(static_cast<std::size_t>(outer.j))) continue;
      const BasisElt r{inner.i, outer.j, shift};
      auto [pos, inserted] = out.try_emplace(r, 0);
      pos->second += ca * cb;
      if (sgn(pos->second) == 0) out.erase(pos);
    }
  }
  return out;
}

CoeffTable bracket(const CoeffTable& a, const CoeffTable& b, const Partition& p) {
  return compose(a, b, p) - compose(b, a, p);
}

std::map<int, CoeffTable> step_decomposition(const CoeffTable& phi, const std::vector<int>& labels) {
  std::map<int, CoeffTable> out;
  for (const auto& [x, c] : phi)
    out[labels.at(static_cast<std::size_t>(x.j)) - labels.at(static_cast<std::size_t>(x.i))].emplace(x, c);
  return out;
}

std::string to_string(const CoeffTable& phi) {
  if (phi.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, c] : phi) {
    Scalar mag = c;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    mag = abs(mag);
    if (mag != 1) out += mag.get_str() + " ";
    out += label(x);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

Vec GlCentralizer::coords(const CoeffTable& phi) const {
  Vec v(basis.size());
  for (const auto& [x, c] : phi) {
    const auto it = position.find(x);
    if (it == position.end()) throw std::out_of_range("coords: " + label(x) + " is not a basis element");
    v[it->second] = c;
  }
  return v;
}

CoeffTable GlCentralizer::table(const Vec& x) const {
  if (x.size() != basis.size()) throw DimensionError("table: coordinate vector has the wrong size");
  CoeffTable out;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (sgn(x[k]) != 0) out.emplace(basis[k], x[k]);
  return out;
}

GlCentralizer make_gl_centralizer(const Partition& p) {
  GlCentralizer z{p, gl_centralizer_basis(p), {}, nullptr};
  for (std::size_t k = 0; k < z.basis.size(); ++k) z.position.emplace(z.basis[k], k);
  std::vector<std::string> labels;
  labels.reserve(z.basis.size());
  for (const auto& x : z.basis) labels.push_back(label(x));
  const auto& basis = z.basis;
  const auto& pos = z.position;
  z.algebra = std::make_shared<const LieAlgebra>(
      "z_gl(e) [" + p.to_string() + "]", std::move(labels), [&](std::size_t u, std::size_t v) {
        Vec out(basis.size());
        for (const auto& [x, c] : bracket({{basis[u], 1}}, {{basis[v], 1}}, p)) out[pos.at(x)] = c;
        return out;
      });
  return z;
}

Vec SigmaSplit::to_z(const Vec& gl_coords) const {
  Vec out;
  if (!z_in_gl.coordinates(gl_coords, out)) throw std::invalid_argument("to_z: element is not sigma-fixed");
  return out;
}

Vec SigmaSplit::to_gl(const Vec& z_coords) const {
  if (z_coords.size() != z_in_gl.dim()) throw DimensionError("to_gl: coordinate vector has the wrong size");
  Vec out(gl.basis.size());
  for (std::size_t r = 0; r < z_coords.size(); ++r) {
    if (sgn(z_coords[r]) == 0) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += z_coords[r] * z_in_gl.rows()(r, c);
  }
  return out;
}

namespace {

QMat sigma_matrix(const Model& m, const GlCentralizer& gl) {
  const std::size_t dim = gl.basis.size();
  QMat out(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const Vec image = gl.coords(coefficients(sigma(m, realise(m.partition, gl.basis[k])), m.partition));
    for (std::size_t r = 0; r < dim; ++r) out(r, k) = image[r];
  }
  return out;
}

std::string combination_label(const GlCentralizer& gl, const Vec& row) { return to_string(gl.table(row)); }

}  // namespace

SigmaSplit sigma_split(const Model& m) {
  if (m.kind == AlgebraKind::GeneralLinear) throw std::invalid_argument("sigma_split: gl has no involution");
  GlCentralizer gl = make_gl_centralizer(m.partition);
  QMat s = sigma_matrix(m, gl);
  const std::size_t dim = gl.basis.size();
  const QMat id = identity(dim);
  Subalgebra fixed(gl.algebra, kernel_basis(s - id));
  Subalgebra odd(gl.algebra, kernel_basis(s + id));
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < fixed.dim(); ++r) labels.push_back(combination_label(gl, fixed.element(r)));
  auto z = std::make_shared<const LieAlgebra>(
      fixed.as_algebra("z(e) in " + to_string(m.kind) + "_" + std::to_string(m.partition.n()) + " [" +
                           m.partition.to_string() + "]",
                       std::move(labels)));
  return SigmaSplit{std::move(gl), std::move(s), std::move(fixed), std::move(odd), std::move(z)};
}

std::vector<FixedCombination> so_fixed_basis(const Model& m) {
  if (m.kind != AlgebraKind::Orthogonal) throw std::invalid_argument("so_fixed_basis: model is not orthogonal");
  const GlCentralizer gl = make_gl_centralizer(m.partition);
  const QMat s = sigma_matrix(m, gl);
  const std::size_t dim = gl.basis.size();
  std::vector<bool> used(dim, false);
  std::vector<FixedCombination> out;
  for (std::size_t k = 0; k < dim; ++k) {
    if (used[k]) continue;
    // Projection (x + sigma x) / 2, rescaled to leading coefficient 1.
    Vec v(dim);
    for (std::size_t r = 0; r < dim; ++r) v[r] = s(r, k);
    v[k] += 1;
    for (std::size_t r = 0; r < dim; ++r)
      if (sgn(v[r]) != 0) used[r] = true;
    if (is_zero(v)) continue;
    const Scalar lead = v[k];
    for (auto& c : v) c /= lead;
    out.push_back({gl.table(v), combination_label(gl, v)});
  }
  return out;
}

int so_epsilon(const Model& m, int i, int j, int s) {
  if (m.kind != AlgebraKind::Orthogonal) throw std::invalid_argument("so_epsilon: model is not orthogonal");
  const Partition& p = m.partition;
  const BasisElt x{i, j, p.d(static_cast<std::size_t>(j)) - s};
  if (!in_range(p, x)) throw std::out_of_range("so_epsilon: " + label(x) + " is out of range");
  const CoeffTable image = coefficients(sigma(m, realise(p, x)), p);
  if (image.size() != 1) throw std::logic_error("so_epsilon: sigma does not permute the generators up to sign");
  const auto& [y, c] = *image.begin();
  if (y == x) return 0;
  return sgn(c);
}

}  // namespace nilcent
