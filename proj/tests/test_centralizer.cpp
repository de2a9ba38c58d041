#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilcent/centralizer.hpp"
#include "oracles.hpp"

using namespace nilcent;

namespace {

oracle::Matrix to_oracle(const QMat& m) {
  oracle::Matrix out = oracle::zero(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

CoeffTable random_table(const std::vector<BasisElt>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  CoeffTable out;
  for (const auto& x : basis)
    if (const int c = dist(rng); c != 0) out[x] = c;
  return out;
}

CoeffTable one(int i, int j, int s) { return {{BasisElt{i, j, s}, Scalar(1)}}; }

std::vector<Partition> small_partitions(int max_n) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("labels are 1-based") {
  CHECK(label({0, 1, 2}) == "xi_1^{2,2}");
  CHECK(to_string(CoeffTable{}) == "0");
  CHECK(to_string(CoeffTable{{{0, 0, 0}, Scalar(1)}, {{1, 0, 1}, Scalar(-1) / 2}}) == "xi_1^{1,0} - 1/2 xi_2^{1,1}");
}

TEST_CASE("basis size equals the dimension of the matrix centraliser") {
  for (const auto& p : small_partitions(8)) {
    CAPTURE(p.to_string());
    const auto basis = gl_centralizer_basis(p);
    CHECK(basis.size() == gl_centralizer_dimension(p));
    const oracle::Blocks b(p.sizes());
    if (p.n() <= 6) CHECK(basis.size() == oracle::centralizer_dim(oracle::nilpotent(b)));
  }
  // sum of (2i - 1) lambda_i over the dual partition
  CHECK(gl_centralizer_dimension(Partition({3, 2})) == 3 + 2 + 2 + 2);
  CHECK(gl_centralizer_dimension(Partition({4})) == 4);
  CHECK(gl_centralizer_dimension(Partition({1, 1, 1})) == 9);
}

TEST_CASE("shift range") {
  const Partition p({5, 3});
  CHECK(in_range(p, {0, 1, 0}));
  CHECK(in_range(p, {0, 1, 2}));
  CHECK_FALSE(in_range(p, {0, 1, 3}));
  CHECK_FALSE(in_range(p, {1, 0, 1}));
  CHECK(in_range(p, {1, 0, 2}));
  CHECK(in_range(p, {1, 0, 4}));
  CHECK_FALSE(in_range(p, {2, 0, 0}));
  CHECK_THROWS_AS(realise(p, BasisElt{1, 0, 1}), std::out_of_range);
}

TEST_CASE("realised basis elements agree with the definition") {
  for (const auto& p : small_partitions(6)) {
    const oracle::Blocks b(p.sizes());
    const auto e = oracle::nilpotent(b);
    CHECK(to_oracle(build_nilpotent(p)) == e);
    for (const auto& x : gl_centralizer_basis(p)) {
      const auto m = oracle::xi(b, x.i, x.j, x.s);
      CHECK(to_oracle(realise(p, x)) == m);
      CHECK(oracle::commutator(e, m) == oracle::zero(b.n, b.n));
    }
  }
}

TEST_CASE("bracket agrees with the matrix commutator") {
  std::mt19937_64 rng(3);
  for (const auto& p : small_partitions(6)) {
    const auto basis = gl_centralizer_basis(p);
    for (int t = 0; t < 4; ++t) {
      const CoeffTable a = random_table(basis, rng), b = random_table(basis, rng);
      const auto expected = oracle::commutator(to_oracle(realise(p, a)), to_oracle(realise(p, b)));
      CHECK(to_oracle(realise(p, bracket(a, b, p))) == expected);
      CHECK(to_oracle(realise(p, compose(a, b, p))) == oracle::mul(to_oracle(realise(p, a)), to_oracle(realise(p, b))));
    }
  }
}

TEST_CASE("bracket with a diagonal element in the reversed order") {
  const Partition p({4, 3, 2});
  // [xi_j^{t,b}, xi_i^{i,s}] = xi_i^{t,s+b} for i = j != t
  CHECK(bracket(one(0, 1, 1), one(0, 0, 1), p) == one(0, 1, 2));
  // = -xi_j^{i,s+b} for i = t != j
  CHECK(bracket(one(2, 0, 2), one(0, 0, 1), p) == CoeffTable{{{2, 0, 3}, Scalar(-1)}});
  // = 0 when i is neither
  CHECK(bracket(one(1, 2, 0), one(0, 0, 1), p).empty());
  // the other argument order gives the negative
  CHECK(bracket(one(0, 0, 1), one(0, 1, 1), p) == CoeffTable{{{0, 1, 2}, Scalar(-1)}});
  // shifts past the block length vanish
  CHECK(bracket(one(0, 1, 2), one(0, 0, 1), p).empty());
}

TEST_CASE("coordinates recover a centralising matrix") {
  const Partition p({3, 2});
  std::mt19937_64 rng(8);
  const auto basis = gl_centralizer_basis(p);
  for (int t = 0; t < 10; ++t) {
    const CoeffTable a = random_table(basis, rng);
    CHECK(coefficients(realise(p, a), p) == a);
  }
  CHECK(coefficients(identity(5), p) == CoeffTable{{{0, 0, 0}, Scalar(1)}, {{1, 1, 0}, Scalar(1)}});
  QMat bad(5, 5);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(coefficients(bad, p), NotInCentralizer);
}

TEST_CASE("structure constants") {
  const GlCentralizer gl = make_gl_centralizer(Partition({3, 2, 1}));
  const LieAlgebra& g = *gl.algebra;
  CHECK(g.dim() == gl_centralizer_dimension(gl.partition));
  CHECK(g.jacobi_violation().empty());
  CHECK_FALSE(g.is_abelian());
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const CoeffTable a = random_table(gl.basis, rng), b = random_table(gl.basis, rng);
    CHECK(gl.table(g.bracket(gl.coords(a), gl.coords(b))) == bracket(a, b, gl.partition));
  }
  CHECK(make_gl_centralizer(Partition({4})).algebra->is_abelian());

  const std::string text = make_gl_centralizer(Partition({2})).algebra->structure_text();
  CHECK(text.find("# basis 0 xi_1^{1,0}") != std::string::npos);
  CHECK(text.find("# basis 1 xi_1^{1,1}") != std::string::npos);
}

TEST_CASE("subalgebra operations") {
  const GlCentralizer gl = make_gl_centralizer(Partition({2, 1}));
  const AlgebraPtr g = gl.algebra;
  const Subalgebra all = whole(g);
  CHECK(all.dim() == g->dim());
  CHECK(all.is_closed());

  const Subalgebra c = center(g);
  // scalars and the nilpotent e itself
  CHECK(c.dim() == 2);
  CHECK(c.contains(gl.coords({{{0, 0, 0}, Scalar(1)}, {{1, 1, 0}, Scalar(1)}})));
  CHECK(c.contains(gl.coords(one(0, 0, 1))));
  CHECK(centralizer_of(all).same_space(c));
  CHECK(normalizer_of(c).same_space(all));

  const Subalgebra diag(g, std::vector<Vec>{gl.coords(one(0, 0, 0)), gl.coords(one(1, 1, 0))});
  CHECK(diag.is_closed());
  CHECK(bracket_span(diag, diag).dim() == 0);
  CHECK(intersect(diag, c).dim() == 1);
  CHECK(all.contains(diag));
  CHECK_FALSE(diag.contains(all));
  Vec coords;
  CHECK(diag.coordinates(gl.coords(one(1, 1, 0)), coords));
  CHECK_FALSE(diag.coordinates(gl.coords(one(0, 1, 0)), coords));

  const Subalgebra off(g, std::vector<Vec>{gl.coords(one(0, 1, 0)), gl.coords(one(1, 0, 1))});
  CHECK_FALSE(off.is_closed());
  CHECK_THROWS_AS(off.as_algebra("off"), std::logic_error);
  CHECK(diag.as_algebra("h").is_abelian());
}

TEST_CASE("step decomposition") {
  const CoeffTable phi{{{0, 1, 0}, Scalar(1)}, {{1, 0, 1}, Scalar(2)}, {{1, 1, 0}, Scalar(3)}};
  const auto steps = step_decomposition(phi, {1, 2});
  REQUIRE(steps.size() == 3);
  CHECK(steps.at(1) == one(0, 1, 0));
  CHECK(steps.at(-1) == CoeffTable{{{1, 0, 1}, Scalar(2)}});
  CHECK(steps.at(0).size() == 1);
  // relabelling the blocks flips the steps
  CHECK(step_decomposition(phi, {2, 1}).at(-1) == one(0, 1, 0));
}

TEST_CASE("sigma split of small models") {
  const SigmaSplit sp2 = sigma_split(build_model(Partition({2}), AlgebraKind::Symplectic));
  CHECK(sp2.z->dim() == 1);
  CHECK(sp2.z1.dim() == 1);

  const SigmaSplit so3 = sigma_split(build_model(Partition({3}), AlgebraKind::Orthogonal));
  CHECK(so3.z->dim() == 1);
  CHECK(so3.z1.dim() == 2);

  const Model so8 = build_model(Partition({5, 3}), AlgebraKind::Orthogonal);
  const SigmaSplit s = sigma_split(so8);
  CHECK(s.z->dim() == 6);
  CHECK(s.z->jacobi_violation().empty());
  CHECK(s.z_in_gl.dim() + s.z1.dim() == s.gl.basis.size());
  const Vec x = s.z_in_gl.element(0);
  CHECK(s.to_gl(s.to_z(x)) == x);

  CHECK_THROWS_AS(sigma_split(build_model(Partition({2}), AlgebraKind::GeneralLinear)), std::invalid_argument);
}

TEST_CASE("sigma-split agrees with the matrix computation of the form centraliser") {
  for (const auto kind : {AlgebraKind::Symplectic, AlgebraKind::Orthogonal})
    for (const auto& p : small_partitions(7)) {
      if (!admissible(p, kind)) continue;
      const Model m = build_model(p, kind);
      const auto direct = oracle::form_centralizer(to_oracle(m.e), to_oracle(*m.form));
      CAPTURE(p.to_string());
      CHECK(sigma_split(m).z->dim() == direct.size());
    }
}

TEST_CASE("orthogonal fixed basis") {
  const Model so3 = build_model(Partition({3}), AlgebraKind::Orthogonal);
  const auto f3 = so_fixed_basis(so3);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].element == one(0, 0, 1));

  const Model so8 = build_model(Partition({5, 3}), AlgebraKind::Orthogonal);
  const auto f8 = so_fixed_basis(so8);
  CHECK(f8.size() == 6);
  const SigmaSplit s = sigma_split(so8);
  // with the size-3 block labelled first: xi_1^{2,4} - xi_2^{1,2}
  const CoeffTable mixed{{{1, 0, 4}, Scalar(1)}, {{0, 1, 2}, Scalar(-1)}};
  CHECK(s.z_in_gl.contains(s.gl.coords(mixed)));
  CHECK_FALSE(s.z_in_gl.contains(s.gl.coords(one(1, 0, 4))));
  for (const auto& f : f8) CHECK(f.element.size() <= 2);

  CHECK(so_epsilon(so8, 1, 0, 0) == -1);
  CHECK(so_epsilon(so8, 0, 0, 3) == 0);
  CHECK_THROWS(so_fixed_basis(build_model(Partition({2}), AlgebraKind::Symplectic)));
}
