#pragma once

// Reference computations for the tests. Nothing here calls into the library
// beyond the Scalar type, so agreement is evidence rather than tautology.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;
using Matrix = std::vector<Row>;  // row-major, square or rectangular

inline Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, Row(c)); }

/// Plain Gauss-Jordan; returns the rank and leaves `m` in reduced echelon form.
inline std::size_t reduce(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(Matrix m) { return reduce(m); }

/// Basis of {x : m x = 0}.
inline std::vector<Row> kernel(Matrix m, std::size_t cols) {
  if (m.empty()) {
    std::vector<Row> out;
    for (std::size_t c = 0; c < cols; ++c) {
      Row v(cols);
      v[c] = 1;
      out.push_back(v);
    }
    return out;
  }
  const std::size_t r = reduce(m);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < cols; ++c)
      if (m[i][c] != 0) {
        pivots.push_back(c);
        break;
      }
  std::vector<Row> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Row v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -m[i][f];
    out.push_back(v);
  }
  return out;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix c = zero(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Matrix sub(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) c[i][j] -= b[i][j];
  return c;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return sub(mul(a, b), mul(b, a)); }

inline Matrix transpose(const Matrix& a) {
  Matrix t = zero(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

/// Jordan data with blocks in the given order; block b spans positions
/// offset[b] .. offset[b] + sizes[b] - 1, position offset[b] + s holding e^s w_b.
struct Blocks {
  std::vector<int> sizes;
  std::vector<std::size_t> offset;
  std::size_t n = 0;

  explicit Blocks(std::vector<int> s) : sizes(std::move(s)) {
    for (int x : sizes) {
      offset.push_back(n);
      n += static_cast<std::size_t>(x);
    }
  }
};

/// Matrix with column c holding the image of basis vector c.
inline Matrix nilpotent(const Blocks& b) {
  Matrix e = zero(b.n, b.n);
  for (std::size_t k = 0; k < b.sizes.size(); ++k)
    for (int s = 0; s + 1 < b.sizes[k]; ++s) e[b.offset[k] + s + 1][b.offset[k] + s] = 1;
  return e;
}

/// The map w_i -> e^s w_j, other generators -> 0, extended e-equivariantly.
inline Matrix xi(const Blocks& b, int i, int j, int s) {
  Matrix m = zero(b.n, b.n);
  for (int t = 0; t < b.sizes[static_cast<std::size_t>(i)]; ++t) {
    const int target = s + t;
    if (target >= b.sizes[static_cast<std::size_t>(j)]) continue;
    m[b.offset[static_cast<std::size_t>(j)] + static_cast<std::size_t>(target)][b.offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(t)] = 1;
  }
  return m;
}

inline Row flatten(const Matrix& m) {
  Row out;
  for (const auto& r : m) out.insert(out.end(), r.begin(), r.end());
  return out;
}

/// dim {X : eX = Xe}, from the n^2 x n^2 linear system.
inline std::size_t centralizer_dim(const Matrix& e) {
  const std::size_t n = e.size();
  Matrix sys = zero(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix unit = zero(n, n);
      unit[a][b] = 1;
      const Row img = flatten(commutator(e, unit));
      for (std::size_t r = 0; r < n * n; ++r) sys[r][a * n + b] = img[r];
    }
  return n * n - rank(sys);
}

/// Basis of {X : eX = Xe, X^T J + J X = 0}.
inline std::vector<Matrix> form_centralizer(const Matrix& e, const Matrix& J) {
  const std::size_t n = e.size();
  Matrix sys;
  std::vector<Row> cols;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix unit = zero(n, n);
      unit[a][b] = 1;
      Row col = flatten(commutator(e, unit));
      const Matrix inv = mul(transpose(unit), J);
      const Matrix rhs = mul(J, unit);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) col.push_back(inv[i][j] + rhs[i][j]);
      cols.push_back(col);
    }
  sys = zero(cols[0].size(), n * n);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) sys[r][c] = cols[c][r];
  std::vector<Matrix> out;
  for (const auto& v : kernel(sys, n * n)) {
    Matrix m = zero(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m[a][b] = v[a * n + b];
    out.push_back(m);
  }
  return out;
}

/// Index of the matrix Lie algebra spanned by `basis`, sampled through trace
/// functionals X -> tr(A X); those restrict onto the whole dual space.
inline std::size_t sampled_index(const std::vector<Matrix>& basis, std::size_t samples, std::uint64_t seed) {
  if (basis.empty()) return 0;
  const std::size_t n = basis[0].size(), d = basis.size();
  std::vector<std::vector<Matrix>> br(d, std::vector<Matrix>(d));
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = u + 1; v < d; ++v) br[u][v] = commutator(basis[u], basis[v]);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  std::size_t best = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    Matrix a = zero(n, n);
    for (auto& r : a)
      for (auto& x : r) x = dist(rng);
    auto trace = [&](const Matrix& x) {
      Q acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) acc += a[i][k] * x[k][i];
      return acc;
    };
    Matrix b = zero(d, d);
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = u + 1; v < d; ++v) {
        b[u][v] = trace(br[u][v]);
        b[v][u] = -b[u][v];
      }
    best = std::max(best, rank(b));
  }
  return d - best;
}

/// Number of partitions of n, by the standard recurrence over the largest part.
inline std::size_t partition_count(int n) {
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
  return p[static_cast<std::size_t>(n)];
}

/// Partitions of n as descending vectors, by recursion on the largest part.
inline void enumerate(int n, int cap, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(n, cap); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  enumerate(n, n, prefix, out);
  return out;
}

/// Parity rules written out directly: sp needs every odd part with even
/// multiplicity, so needs every even part with even multiplicity.
inline bool admissible(const std::vector<int>& sizes, char kind) {
  if (kind == 'g') return true;
  const int parity = kind == 's' ? 1 : 0;  // 's' for sp, 'o' for so
  for (int x : sizes)
    if (x % 2 == parity && std::count(sizes.begin(), sizes.end(), x) % 2 != 0) return false;
  return true;
}

}  // namespace oracle
