#include <algorithm>
#include <sstream>

#include "nilcent/centralizer.hpp"

namespace nilcent {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, const BasisBracket& bracket)
    : name_(std::move(name)), labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {
  const std::size_t n = dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const Vec b = bracket(u, v);
      if (b.size() != n) throw DimensionError("LieAlgebra: bracket returned a vector of the wrong size");
      for (std::size_t w = 0; w < n; ++w)
        if (sgn(b[w]) != 0) {
          table_[u * n + v].push_back({w, b[w]});
          table_[v * n + u].push_back({w, -b[w]});
        }
    }
}

LieAlgebra LieAlgebra::abelian(std::string name, std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) labels.push_back("x" + std::to_string(k + 1));
  return LieAlgebra(std::move(name), std::move(labels), [dim](std::size_t, std::size_t) { return Vec(dim); });
}

Vec LieAlgebra::basis_bracket(std::size_t u, std::size_t v) const {
  Vec out(dim());
  for (const auto& [w, c] : structure(u, v)) out[w] = c;
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket: vector size differs from the algebra dimension");
  Vec out(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (sgn(x[u]) == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (sgn(y[v]) == 0) continue;
      const auto& row = structure(u, v);
      if (row.empty()) continue;
      const Scalar xy = x[u] * y[v];
      for (const auto& [w, c] : row) out[w] += xy * c;
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& row) { return row.empty(); });
}

std::string LieAlgebra::jacobi_violation() const {
  const std::size_t n = dim();
  // [[u,v],w] for sparse [u,v].
  auto nested = [&](std::size_t u, std::size_t v, std::size_t w, Vec& acc) {
    for (const auto& [t, c] : structure(u, v))
      for (const auto& [r, d] : structure(t, w)) acc[r] += c * d;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        Vec acc(n);
        nested(u, v, w, acc);
        nested(v, w, u, acc);
        nested(w, u, v, acc);
        if (!is_zero(acc))
          return "Jacobi fails on (" + labels_[u] + ", " + labels_[v] + ", " + labels_[w] + ")";
      }
  return {};
}

std::string LieAlgebra::structure_text() const {
  std::ostringstream os;
  os << "# " << name_ << "\n# dim " << dim() << "\n";
  for (std::size_t u = 0; u < dim(); ++u) os << "# basis " << u << " " << labels_[u] << "\n";
  for (std::size_t u = 0; u < dim(); ++u)
    for (std::size_t v = u + 1; v < dim(); ++v)
      for (const auto& [w, c] : structure(u, v)) os << u << ' ' << v << ' ' << w << ' ' << c.get_str() << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> pivot_columns(const QMat& rows) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::size_t c = 0;
    while (c < rows.cols() && sgn(rows(r, c)) == 0) ++c;
    out.push_back(c);
  }
  return out;
}

// x minus its projection onto an RREF row space along the pivot coordinates;
// zero exactly when x lies in the span.
Vec residual(const QMat& rows, const Vec& x) {
  Vec out = x;
  const auto pivots = pivot_columns(rows);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    const Scalar c = x[pivots[r]];
    if (sgn(c) == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (sgn(rows(r, k)) != 0) out[k] -= c * rows(r, k);
  }
  return out;
}

}  // namespace

Subalgebra::Subalgebra(AlgebraPtr parent, const QMat& spanning) : parent_(std::move(parent)) {
  if (spanning.rows() == 0) {
    rows_ = QMat(0, parent_->dim());
    return;
  }
  if (spanning.cols() != parent_->dim()) throw DimensionError("Subalgebra: spanning set has the wrong width");
  rows_ = rowspace_basis(spanning);
}

Subalgebra::Subalgebra(AlgebraPtr parent, const std::vector<Vec>& spanning)
    : Subalgebra(parent, spanning.empty() ? QMat(0, parent->dim()) : from_rows(spanning, parent->dim())) {}

Vec Subalgebra::element(std::size_t r) const {
  Vec v(rows_.cols());
  for (std::size_t c = 0; c < rows_.cols(); ++c) v[c] = rows_(r, c);
  return v;
}

std::vector<Vec> Subalgebra::elements() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(element(r));
  return out;
}

bool Subalgebra::contains(const Vec& x) const {
  if (x.size() != rows_.cols()) throw DimensionError("contains: vector has the wrong size");
  return is_zero(residual(rows_, x));
}

bool Subalgebra::coordinates(const Vec& x, Vec& out) const {
  if (!contains(x)) return false;
  const auto pivots = pivot_columns(rows_);
  out.assign(dim(), Scalar(0));
  for (std::size_t r = 0; r < dim(); ++r) out[r] = x[pivots[r]];
  return true;
}

bool Subalgebra::contains(const Subalgebra& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.element(r))) return false;
  return true;
}

bool Subalgebra::is_closed() const {
  const auto elems = elements();
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (!contains(parent_->bracket(elems[a], elems[b]))) return false;
  return true;
}

LieAlgebra Subalgebra::as_algebra(std::string name, std::vector<std::string> labels) const {
  if (!is_closed()) throw std::logic_error("as_algebra: subspace is not closed under the bracket");
  if (labels.empty())
    for (std::size_t r = 0; r < dim(); ++r) labels.push_back("y" + std::to_string(r + 1));
  const auto elems = elements();
  return LieAlgebra(std::move(name), std::move(labels), [&](std::size_t u, std::size_t v) {
    Vec coords;
    coordinates(parent_->bracket(elems[u], elems[v]), coords);
    return coords;
  });
}

Subalgebra intersect(const Subalgebra& a, const Subalgebra& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw std::invalid_argument("intersect: different parent algebras");
  if (a.dim() == 0 || b.dim() == 0) return Subalgebra(a.parent_ptr(), QMat(0, a.parent().dim()));
  return Subalgebra(a.parent_ptr(), intersect_rowspaces(a.rows(), b.rows()));
}

Subalgebra bracket_span(const Subalgebra& a, const Subalgebra& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw std::invalid_argument("bracket_span: different parent algebras");
  std::vector<Vec> out;
  const auto be = b.elements();
  for (const auto& x : a.elements())
    for (const auto& y : be) {
      Vec br = a.parent().bracket(x, y);
      if (!is_zero(br)) out.push_back(std::move(br));
    }
  return Subalgebra(a.parent_ptr(), out);
}

Subalgebra whole(const AlgebraPtr& g) { return Subalgebra(g, identity(g->dim())); }

Subalgebra center(const AlgebraPtr& g) { return centralizer_of(whole(g)); }

Subalgebra centralizer_of(const Subalgebra& s) {
  const LieAlgebra& g = s.parent();
  const std::size_t n = g.dim();
  const auto elems = s.elements();
  // Row (r, w), column u: coefficient of x_w in [x_u, s_r].
  QMat m(elems.size() * n, n);
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (std::size_t u = 0; u < n; ++u) {
      Vec unit(n);
      unit[u] = 1;
      const Vec br = g.bracket(unit, elems[r]);
      for (std::size_t w = 0; w < n; ++w) m(r * n + w, u) = br[w];
    }
  if (m.rows() == 0) return whole(s.parent_ptr());
  return Subalgebra(s.parent_ptr(), kernel_basis(m));
}

Subalgebra normalizer_of(const Subalgebra& s) {
  const LieAlgebra& g = s.parent();
  const std::size_t n = g.dim();
  const auto elems = s.elements();
  QMat m(elems.size() * n, n);
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (std::size_t u = 0; u < n; ++u) {
      Vec unit(n);
      unit[u] = 1;
      const Vec res = residual(s.rows(), g.bracket(unit, elems[r]));
      for (std::size_t w = 0; w < n; ++w) m(r * n + w, u) = res[w];
    }
  if (m.rows() == 0) return whole(s.parent_ptr());
  return Subalgebra(s.parent_ptr(), kernel_basis(m));
}

}  // namespace nilcent
