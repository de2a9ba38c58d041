#pragma once

// The centraliser z_gl(e) in the basis xi_i^{j,s}, finite-dimensional Lie
// algebras given by structure constants, subalgebras as row-reduced
// coefficient matrices, and the sigma-split of z_gl(e) for sp and so.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcent/exactlin.hpp"
#include "nilcent/jordan.hpp"

namespace nilcent {

/// xi_i^{j,s}: sends w_i to e^s w_j and the other generators to zero. Block
/// indices are 0-based here and printed 1-based.
struct BasisElt {
  int i = 0;
  int j = 0;
  int s = 0;
  auto operator<=>(const BasisElt&) const = default;
};

std::string label(const BasisElt& x);

/// Coefficients c_i^{j,s} of an element of z_gl(e); zero entries are never stored.
using CoeffTable = std::map<BasisElt, Scalar>;

class NotInCentralizer : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shift range max(0, d_j - d_i) <= s <= d_j, which is what
/// e^{d_i+1} xi(w_i) = 0 allows.
bool in_range(const Partition& p, const BasisElt& x);

/// All valid triples in lexicographic (i, j, s) order.
std::vector<BasisElt> gl_centralizer_basis(const Partition& p);

/// Sum over i, j of min(size_i, size_j).
std::size_t gl_centralizer_dimension(const Partition& p);

QMat realise(const Partition& p, const BasisElt& x);
QMat realise(const Partition& p, const CoeffTable& phi);

/// Throws NotInCentralizer when phi does not commute with e.
CoeffTable coefficients(const QMat& phi, const Partition& p);

void add_scaled(CoeffTable& acc, const CoeffTable& x, const Scalar& c);
CoeffTable operator+(const CoeffTable& a, const CoeffTable& b);
CoeffTable operator-(const CoeffTable& a, const CoeffTable& b);

/// a∘b via xi_a^{b,s} ∘ xi_c^{a,t} = xi_c^{b,s+t} (zero once s + t > d_b).
CoeffTable compose(const CoeffTable& a, const CoeffTable& b, const Partition& p);

/// Matrix commutator ab - ba assembled from the composition rule.
CoeffTable bracket(const CoeffTable& a, const CoeffTable& b, const Partition& p);

/// Splits phi by step j - i, measured in the given block labels
/// (labels[i] is the label of stored block i).
std::map<int, CoeffTable> step_decomposition(const CoeffTable& phi, const std::vector<int>& labels);

std::string to_string(const CoeffTable& phi);

// ---------------------------------------------------------------------------

struct StructureEntry {
  std::size_t w;
  Scalar value;
};

/// [x_u, x_v] = sum_w c_uv^w x_w with sparse rows.
class LieAlgebra {
 public:
  using BasisBracket = std::function<Vec(std::size_t, std::size_t)>;

  /// Evaluates `bracket` on pairs u < v and fills the rest by antisymmetry.
  LieAlgebra(std::string name, std::vector<std::string> labels, const BasisBracket& bracket);

  static LieAlgebra abelian(std::string name, std::size_t dim);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<StructureEntry>& structure(std::size_t u, std::size_t v) const { return table_[u * dim() + v]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec basis_bracket(std::size_t u, std::size_t v) const;
  bool is_abelian() const;

  /// First violated Jacobi triple, or empty.
  std::string jacobi_violation() const;

  /// Lines "u v w value" for u < v and nonzero c_uv^w, preceded by '#' comment
  /// lines naming the basis.
  std::string structure_text() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<StructureEntry>> table_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// A subspace of a parent algebra, stored as a reduced row echelon basis.
class Subalgebra {
 public:
  Subalgebra(AlgebraPtr parent, const QMat& spanning);
  Subalgebra(AlgebraPtr parent, const std::vector<Vec>& spanning);

  const LieAlgebra& parent() const { return *parent_; }
  const AlgebraPtr& parent_ptr() const { return parent_; }
  std::size_t dim() const { return rows_.rows(); }
  const QMat& rows() const { return rows_; }
  Vec element(std::size_t r) const;
  std::vector<Vec> elements() const;

  bool contains(const Vec& x) const;
  /// Coordinates of x in the row basis; false when x is not in the span.
  bool coordinates(const Vec& x, Vec& out) const;
  bool contains(const Subalgebra& other) const;
  bool same_space(const Subalgebra& other) const { return rows_ == other.rows_; }

  bool is_closed() const;
  /// Induced structure on the row basis; throws std::logic_error if not closed.
  LieAlgebra as_algebra(std::string name, std::vector<std::string> labels = {}) const;

 private:
  AlgebraPtr parent_;
  QMat rows_;
};

Subalgebra intersect(const Subalgebra& a, const Subalgebra& b);
/// span{[x, y] : x in a, y in b}
Subalgebra bracket_span(const Subalgebra& a, const Subalgebra& b);
Subalgebra whole(const AlgebraPtr& g);
Subalgebra center(const AlgebraPtr& g);
/// {x in g : [x, y] = 0 for all y in s}
Subalgebra centralizer_of(const Subalgebra& s);
/// {x in g : [x, s] ⊆ s}
Subalgebra normalizer_of(const Subalgebra& s);

// ---------------------------------------------------------------------------

/// z_gl(e) with its xi-basis; coordinates are indexed like `basis`.
struct GlCentralizer {
  Partition partition;
  std::vector<BasisElt> basis;
  std::map<BasisElt, std::size_t> position;
  AlgebraPtr algebra;

  Vec coords(const CoeffTable& phi) const;
  CoeffTable table(const Vec& x) const;
  QMat matrix(const Vec& x) const { return realise(partition, table(x)); }
};

GlCentralizer make_gl_centralizer(const Partition& p);

/// z_gl(e) = z(e) ⊕ z1 under sigma(x) = -J x^T J^{-1}.
struct SigmaSplit {
  GlCentralizer gl;
  QMat sigma;  // column k holds sigma(basis[k])
  Subalgebra z_in_gl;
  Subalgebra z1;
  AlgebraPtr z;  // basis = rows of z_in_gl

  Vec to_z(const Vec& gl_coords) const;
  Vec to_gl(const Vec& z_coords) const;
};

/// Throws std::invalid_argument for gl models.
SigmaSplit sigma_split(const Model& m);

struct FixedCombination {
  CoeffTable element;  // leading coefficient 1
  std::string label;
};

/// Basis of z(e) for an orthogonal model: each member is supported on a pair
/// {xi_i^{j,·}, xi_{j*}^{i*,·}} (or a single sigma-fixed generator).
std::vector<FixedCombination> so_fixed_basis(const Model& m);

/// epsilon(i, j, s) with xi_i^{j,d_j-s} + epsilon xi_{j*}^{i*,d_i-s} in z(e);
/// 0 when xi_i^{j,d_j-s} is itself sigma-fixed or sigma-odd.
int so_epsilon(const Model& m, int i, int j, int s);

}  // namespace nilcent
