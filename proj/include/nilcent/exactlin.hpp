#pragma once

// Exact dense linear algebra over the rationals and over multivariate
// polynomial rings with rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilcent {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const Scalar& x);
Scalar parse_scalar(const std::string& text);

template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("Mat: entry count does not match shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<T>& entries() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMat = Mat<Scalar>;

// ---------------------------------------------------------------------------
// Rational matrices

QMat identity(std::size_t n);
QMat zeros(std::size_t rows, std::size_t cols);
QMat from_rows(const std::vector<Vec>& rows, std::size_t cols);
QMat transpose(const QMat& m);
QMat operator*(const QMat& a, const QMat& b);
QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator*(const Scalar& s, const QMat& m);
Vec operator*(const QMat& m, const Vec& v);
QMat matrix_power(const QMat& m, unsigned k);
bool is_zero(const QMat& m);
bool is_zero(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
QMat vstack(const QMat& a, const QMat& b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMat& m);

std::size_t rank(const QMat& m);

/// Basis of {v : m v = 0}; exactly cols - rank vectors.
std::vector<Vec> kernel_basis(const QMat& m);

/// Basis of the row space in reduced echelon form (zero rows dropped).
QMat rowspace_basis(const QMat& m);

/// Rows form a basis of rowspace(a) ∩ rowspace(b). Throws DimensionError on
/// column mismatch.
QMat intersect_rowspaces(const QMat& a, const QMat& b);

/// Solves x * m = v for a row vector x; empty optional-like result is
/// signalled by returning false.
bool solve_left(const QMat& m, const Vec& v, Vec& x);

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
QMat inverse(const QMat& m);

// ---------------------------------------------------------------------------
// Multivariate polynomials

/// Exponent vector with one slot per indeterminate.
using Monomial = std::vector<std::uint16_t>;

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index, const Scalar& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  Scalar evaluate(std::span<const Scalar> point) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Exact quotient a / b. Throws std::domain_error when b does not divide a.
  friend MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

  /// Adds c * x^mono, keeping the canonical order.
  void add_term(const Monomial& mono, const Scalar& c);

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  // Terms sorted by descending lexicographic monomial order; no zero coefficients.
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;

  static MultiPoly from_unsorted(std::size_t nvars, std::vector<Term> terms);
  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, int sign);
};

using PolyMat = Mat<MultiPoly>;

/// Rank over the field of rational functions, by fraction-free elimination
/// with full pivot search preferring the entry with the fewest terms. Rows
/// are kept primitive (monomial and rational content removed) after every
/// update.
std::size_t generic_rank(const PolyMat& m);

QMat evaluate(const PolyMat& m, std::span<const Scalar> point);

/// Integer point with coordinates uniform in [-bound, bound].
Vec random_point(std::size_t nvars, std::mt19937_64& rng, long bound = 10000);

/// Maximum rank of m over `samples` random integer points.
std::size_t sampled_rank(const PolyMat& m, std::size_t samples, std::mt19937_64& rng,
                         long bound = 10000);

}  // namespace nilcent
