#include "nilcent/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace nilcent {

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar parse_scalar(const std::string& text) {
  Scalar out;
  if (text.empty() || out.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  out.canonicalize();
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return out;
}

QMat identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat zeros(std::size_t rows, std::size_t cols) { return QMat(rows, cols); }

QMat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMat transpose(const QMat& m) {
  QMat t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  QMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shapes differ");
  QMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shapes differ");
  QMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

QMat operator*(const Scalar& s, const QMat& m) {
  QMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

Vec operator*(const QMat& m, const Vec& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector product: size mismatch");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

QMat matrix_power(const QMat& m, unsigned k) {
  QMat out = identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

bool is_zero(const QMat& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

QMat vstack(const QMat& a, const QMat& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  QMat out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && sgn(m(sel, c)) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(prow, sel);
    const Scalar inv = 1 / m(prow, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(prow, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == prow || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(prow, j)) != 0) m(i, j) -= f * m(prow, j);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t rank(const QMat& m) {
  // Clear denominators row by row, then fraction-free elimination over Z.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };
  mpz_class prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t sel = k;
    while (sel < rows && sgn(at(sel, c)) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(k, j), at(sel, j));
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(k, c) * at(i, j) - at(i, c) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(k, c);
    ++k;
  }
  return k;
}

std::vector<Vec> kernel_basis(const QMat& m) {
  QMat work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -work(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat rowspace_basis(const QMat& m) {
  QMat work = m;
  const auto pivots = rref(work);
  QMat out(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = work(r, c);
  return out;
}

QMat intersect_rowspaces(const QMat& a, const QMat& b) {
  if (a.cols() != b.cols()) throw DimensionError("intersect_rowspaces: column counts differ");
  const QMat ab = rowspace_basis(a);
  const QMat bb = rowspace_basis(b);
  // x * ab = y * bb  <=>  [x | y] lies in the left kernel of [ab ; -bb].
  const QMat stacked = vstack(ab, Scalar(-1) * bb);
  const auto left_kernel = kernel_basis(transpose(stacked));
  std::vector<Vec> rows;
  for (const auto& coeffs : left_kernel) {
    Vec v(a.cols());
    for (std::size_t r = 0; r < ab.rows(); ++r)
      if (sgn(coeffs[r]) != 0)
        for (std::size_t c = 0; c < a.cols(); ++c) v[c] += coeffs[r] * ab(r, c);
    rows.push_back(std::move(v));
  }
  return rowspace_basis(from_rows(rows, a.cols()));
}

bool solve_left(const QMat& m, const Vec& v, Vec& x) {
  if (v.size() != m.cols()) throw DimensionError("solve_left: size mismatch");
  // Solve m^T x = v via the augmented system.
  QMat aug(m.cols(), m.rows() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) aug(c, r) = m(r, c);
  for (std::size_t c = 0; c < m.cols(); ++c) aug(c, m.rows()) = v[c];
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.rows()) return false;
  x.assign(m.rows(), Scalar(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.rows());
  return true;
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  QMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// ---------------------------------------------------------------------------
// MultiPoly

namespace {

// Descending lexicographic order.
bool mono_greater(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return out;
}

void check_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("MultiPoly: variable counts differ");
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(nvars, 0), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index, const Scalar& c) {
  if (index >= nvars) throw DimensionError("MultiPoly::variable: index out of range");
  MultiPoly p(nvars);
  if (sgn(c) != 0) {
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_.push_back({std::move(m), c});
  }
  return p;
}

MultiPoly MultiPoly::from_unsorted(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return mono_greater(a.mono, b.mono); });
  MultiPoly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (auto e : t.mono) d += e;
    best = std::max(best, d);
  }
  return best;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw DimensionError("MultiPoly::evaluate: point has wrong size");
  Scalar sum = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

void MultiPoly::add_term(const Monomial& mono, const Scalar& c) {
  if (mono.size() != nvars_) throw DimensionError("MultiPoly::add_term: monomial has wrong size");
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return mono_greater(t.mono, m); });
  if (it != terms_.end() && it->mono == mono) {
    it->coeff += c;
    if (sgn(it->coeff) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{mono, c});
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

// Merge of two sorted term lists with a sign on the second operand.
MultiPoly MultiPoly::combine(const MultiPoly& a, const MultiPoly& b, int sign) {
  MultiPoly p(a.nvars());
  auto& out = p.terms_;
  out.reserve(a.term_count() + b.term_count());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && mono_greater(ia->mono, ib->mono))) {
      out.push_back(*ia++);
    } else if (ia == a.terms_.end() || mono_greater(ib->mono, ia->mono)) {
      out.push_back({ib->mono, sign > 0 ? ib->coeff : Scalar(-ib->coeff)});
      ++ib;
    } else {
      Scalar c = sign > 0 ? Scalar(ia->coeff + ib->coeff) : Scalar(ia->coeff - ib->coeff);
      if (sgn(c) != 0) out.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  return MultiPoly::combine(a, b, +1);
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  return MultiPoly::combine(a, b, -1);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.term_count() * b.term_count());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) prod.push_back({mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
  return MultiPoly::from_unsorted(a.nvars(), std::move(prod));
}

MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
  MultiPoly p(a.nvars());
  if (sgn(s) == 0) return p;
  p = a;
  for (auto& t : p.terms_) t.coeff *= s;
  return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  MultiPoly q(a.nvars());
  if (a.is_zero()) return q;
  const auto& lead = b.terms_.front();
  if (b.term_count() == 1) {
    q.terms_.reserve(a.term_count());
    for (const auto& t : a.terms_) {
      if (!divides(lead.mono, t.mono)) throw std::domain_error("exact_divide: not divisible");
      q.terms_.push_back({mono_div(t.mono, lead.mono), t.coeff / lead.coeff});
    }
    return q;  // monomial division preserves the order
  }
  MultiPoly rem = a;
  std::vector<MultiPoly::Term> quot;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms_.front();
    if (!divides(lead.mono, lt.mono)) throw std::domain_error("exact_divide: not divisible");
    MultiPoly::Term t{mono_div(lt.mono, lead.mono), lt.coeff / lead.coeff};
    MultiPoly step(a.nvars());
    step.terms_.reserve(b.term_count());
    for (const auto& tb : b.terms_) step.terms_.push_back({mono_mul(tb.mono, t.mono), tb.coeff * t.coeff});
    rem = rem - step;
    quot.push_back(std::move(t));
  }
  q.terms_ = std::move(quot);  // produced in descending order
  return q;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0 && c == -1) {
      os << "-";
      c = 1;
    }
    bool has_var = std::any_of(t.mono.begin(), t.mono.end(), [](auto e) { return e != 0; });
    if (c != 1 || !has_var) os << c.get_str() << (has_var ? "*" : "");
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial matrices

QMat evaluate(const PolyMat& m, std::span<const Scalar> point) {
  QMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
  return out;
}

Vec random_point(std::size_t nvars, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Vec p(nvars);
  for (auto& x : p) x = dist(rng);
  return p;
}

std::size_t sampled_rank(const PolyMat& m, std::size_t samples, std::mt19937_64& rng, long bound) {
  std::size_t nvars = 0;
  for (const auto& e : m.entries()) nvars = std::max(nvars, e.nvars());
  std::size_t best = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec p = random_point(nvars, rng, bound);
    best = std::max(best, rank(evaluate(m, p)));
  }
  return best;
}

namespace {

// Divides a row by the monomial gcd of its entries and makes its
// coefficients coprime integers. The row's span over the rational function
// field is unchanged.
void make_primitive(std::span<MultiPoly> row, std::size_t nvars) {
  Monomial common;
  mpz_class num_gcd = 0, den_lcm = 1;
  bool any = false;
  for (const auto& e : row)
    for (const auto& t : e.terms()) {
      if (!any) {
        common = t.mono;
        any = true;
      } else {
        for (std::size_t v = 0; v < nvars; ++v) common[v] = std::min(common[v], t.mono[v]);
      }
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  if (!any) return;
  const bool shift = std::any_of(common.begin(), common.end(), [](auto x) { return x != 0; });
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  MultiPoly divisor(nvars);
  if (shift) divisor.add_term(common, 1);
  for (auto& e : row) {
    if (e.is_zero()) continue;
    if (shift) e = exact_divide(e, divisor);
    if (factor != 1) e = factor * e;
  }
}

}  // namespace

std::size_t generic_rank(const PolyMat& input) {
  PolyMat m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t nvars = 0;
  for (const auto& e : m.entries()) nvars = std::max(nvars, e.nvars());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m(i, j).nvars() != nvars) {
        if (!m(i, j).is_zero()) throw DimensionError("generic_rank: mixed variable counts");
        m(i, j) = MultiPoly(nvars);
      }
  for (std::size_t i = 0; i < rows; ++i) make_primitive(m.row(i), nvars);

  // Fraction-free elimination. Only rows with a nonzero entry in the pivot
  // column are cross-multiplied, so block structure in sparse input survives;
  // each touched row is then reduced to its primitive part.
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows, pc = cols, best_terms = 0;
    unsigned best_deg = 0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const auto& e = m(i, j);
        if (e.is_zero()) continue;
        const std::size_t t = e.term_count();
        if (pr == rows || t < best_terms || (t == best_terms && e.total_degree() < best_deg)) {
          pr = i;
          pc = j;
          best_terms = t;
          best_deg = e.total_degree();
        }
      }
    if (pr == rows) break;
    m.swap_rows(k, pr);
    m.swap_cols(k, pc);
    const MultiPoly pivot = m(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (m(i, k).is_zero()) continue;
      const MultiPoly lead = m(i, k);
      for (std::size_t j = k + 1; j < cols; ++j) {
        MultiPoly next = m(i, j).is_zero() ? MultiPoly(nvars) : pivot * m(i, j);
        if (!m(k, j).is_zero()) next = next - lead * m(k, j);
        m(i, j) = std::move(next);
      }
      m(i, k) = MultiPoly(nvars);
      make_primitive(m.row(i).subspan(k + 1), nvars);
    }
  }
#ifndef NDEBUG
  {
    std::mt19937_64 rng(0x5eedULL + rows * 131 + cols);
    for (int s = 0; s < 2; ++s) assert(rank(evaluate(input, random_point(nvars, rng))) <= k);
  }
#endif
  return k;
}

}  // namespace nilcent
