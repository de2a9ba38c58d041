#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilcent/jordan.hpp"
#include "oracles.hpp"

using namespace nilcent;

namespace {

bool is_symmetric(const QMat& j, int sign) {
  for (std::size_t r = 0; r < j.rows(); ++r)
    for (std::size_t c = 0; c < j.cols(); ++c)
      if (j(r, c) != sign * j(c, r)) return false;
  return true;
}

}  // namespace

TEST_CASE("partition parsing") {
  CHECK(parse_partition("5,3,3,1").sizes() == std::vector<int>{5, 3, 3, 1});
  CHECK(parse_partition(" 1, 3 ,2").sizes() == std::vector<int>{3, 2, 1});
  CHECK(parse_partition("4").n() == 4);
  CHECK_THROWS_AS(parse_partition(""), ParseError);
  CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,-1"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,0"), ParseError);
  CHECK_THROWS_AS(parse_partition("2.5"), ParseError);
  CHECK(parse_partition("5,3").to_string() == "5,3");
}

TEST_CASE("partition layout") {
  const Partition p({2, 3});
  CHECK(p.sizes() == std::vector<int>{3, 2});
  CHECK(p.k() == 2);
  CHECK(p.d(0) == 2);
  CHECK(p.position(1, 1) == 4);
}

TEST_CASE("kind parsing") {
  CHECK(parse_kind("gl") == AlgebraKind::GeneralLinear);
  CHECK(parse_kind("sp") == AlgebraKind::Symplectic);
  CHECK(parse_kind("so") == AlgebraKind::Orthogonal);
  CHECK_THROWS(parse_kind("su"));
  CHECK(to_string(AlgebraKind::Orthogonal) == "so");
}

TEST_CASE("enumeration matches the partition function and is ordered") {
  for (int n = 1; n <= 12; ++n) {
    const auto parts = partitions_of(n);
    CHECK(parts.size() == oracle::partition_count(n));
    const auto expected = oracle::partitions(n);
    REQUIRE(parts.size() == expected.size());
    for (std::size_t i = 0; i < parts.size(); ++i) CHECK(parts[i].sizes() == expected[i]);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) CHECK(parts[i].sizes() > parts[i + 1].sizes());
    for (const auto& p : parts) CHECK(p.n() == n);
  }
  std::size_t total = 0;
  for (int n = 1; n <= 7; ++n) total += partitions_of(n).size();
  CHECK(total == 44);
}

TEST_CASE("admissibility") {
  CHECK(admissible(Partition({3, 3}), AlgebraKind::Symplectic));
  CHECK_FALSE(admissible(Partition({3}), AlgebraKind::Symplectic));
  CHECK(admissible(Partition({5, 3}), AlgebraKind::Orthogonal));
  CHECK_FALSE(admissible(Partition({2}), AlgebraKind::Orthogonal));
  CHECK(admissible(Partition({2, 1, 1}), AlgebraKind::GeneralLinear));
  CHECK(admissibility_violation(Partition({3, 1}), AlgebraKind::Symplectic).find("odd") != std::string::npos);
  CHECK(admissibility_violation(Partition({3}), AlgebraKind::Symplectic).find("even n") != std::string::npos);
  CHECK(admissibility_violation(Partition({2, 1}), AlgebraKind::Orthogonal).find("even part") != std::string::npos);
  CHECK_THROWS_AS(build_model(Partition({3}), AlgebraKind::Symplectic), InadmissibleError);

  for (int n = 1; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(admissible(p, AlgebraKind::Symplectic) == oracle::admissible(p.sizes(), 's'));
      CHECK(admissible(p, AlgebraKind::Orthogonal) == oracle::admissible(p.sizes(), 'o'));
    }
}

TEST_CASE("classical ranks") {
  CHECK(classical_rank(AlgebraKind::GeneralLinear, 5) == 5);
  CHECK(classical_rank(AlgebraKind::Symplectic, 8) == 4);
  CHECK(classical_rank(AlgebraKind::Orthogonal, 9) == 4);
  CHECK(classical_rank(AlgebraKind::Orthogonal, 8) == 4);
}

TEST_CASE("nilpotent matrices") {
  const QMat e2 = build_nilpotent(Partition({2}));
  CHECK(e2(1, 0) == 1);
  CHECK(rank(e2) == 1);
  CHECK(is_zero(build_nilpotent(Partition({1, 1}))));
  const QMat e = build_nilpotent(Partition({3, 2}));
  CHECK(rank(e) == 3);
  CHECK_FALSE(is_zero(e * e));
  CHECK(is_zero(e * e * e));
}

TEST_CASE("small forms") {
  const Model sp2 = build_model(Partition({2}), AlgebraKind::Symplectic);
  REQUIRE(sp2.form);
  CHECK(is_symmetric(*sp2.form, -1));
  CHECK(is_zero(transpose(sp2.e) * *sp2.form + *sp2.form * sp2.e));

  const Model so3 = build_model(Partition({3}), AlgebraKind::Orthogonal);
  CHECK(is_symmetric(*so3.form, 1));
  CHECK((*so3.form)(0, 2) == 1);  // (w, e^2 w) = 1
  CHECK(is_zero(transpose(so3.e) * *so3.form + *so3.form * so3.e));

  const Model sp6 = build_model(Partition({3, 3}), AlgebraKind::Symplectic);
  CHECK(rank(*sp6.form) == 6);
  CHECK(is_symmetric(*sp6.form, -1));
  CHECK(sp6.pairing.partner[0] == 1);
  CHECK(sp6.pairing.partner[1] == 0);

  CHECK_FALSE(build_model(Partition({2, 1}), AlgebraKind::GeneralLinear).form);
}

TEST_CASE("every admissible model satisfies its invariants in both form variants") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : partitions_of(n))
      for (const auto kind : {AlgebraKind::GeneralLinear, AlgebraKind::Symplectic, AlgebraKind::Orthogonal}) {
        if (!admissible(p, kind)) continue;
        for (const auto variant : {FormVariant::Standard, FormVariant::Alternate}) {
          const Model m = build_model(p, kind, variant);
          CAPTURE(p.to_string());
          CHECK(model_violation(m).empty());
          if (!m.form) continue;
          // direct matrix checks, independent of model_violation
          const QMat& j = *m.form;
          CHECK(is_symmetric(j, kind == AlgebraKind::Orthogonal ? 1 : -1));
          CHECK(is_zero(transpose(m.e) * j + j * m.e));
          CHECK(rank(j) == static_cast<std::size_t>(n));
          CHECK(j * *m.form_inverse == identity(static_cast<std::size_t>(n)));
        }
      }
}

TEST_CASE("sigma fixes exactly the form-preserving matrices") {
  const Model m = build_model(Partition({4, 2}), AlgebraKind::Symplectic);
  const QMat x = m.e;  // e preserves the form
  CHECK(sigma(m, x) == x);
  const QMat one = identity(6);
  CHECK(sigma(m, one) == Scalar(-1) * one);
  const Model g = build_model(Partition({2}), AlgebraKind::GeneralLinear);
  CHECK_THROWS(sigma(g, identity(2)));
}
