#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilcent/covectors.hpp"

using namespace nilcent;

namespace {

bool vanishes(const Vec& f, const Subalgebra& s) {
  for (const auto& x : s.elements())
    if (sgn(dot(f, x)) != 0) return false;
  return true;
}

Weights weights(std::initializer_list<long> a) {
  Weights w;
  for (long x : a) w.a.emplace_back(x);
  return w;
}

std::vector<Model> so_models(int max_n) {
  std::vector<Model> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : partitions_of(n))
      if (admissible(p, AlgebraKind::Orthogonal)) out.push_back(build_model(p, AlgebraKind::Orthogonal));
  return out;
}

/// The case split written out on block sizes alone (descending): odd sizes
/// are self-paired, equal even sizes pair off consecutively.
std::string expected_case(const std::vector<int>& sizes) {
  const std::size_t k = sizes.size();
  if (k == 1) return "RegularOdd";
  if (k == 2 && sizes[0] % 2 == 0 && sizes[1] % 2 == 0) return "TwoEvenBlocks";
  for (std::size_t len = 2; len < k; len += 2) {
    const int last = sizes[len - 1];
    const auto run = std::count(sizes.begin(), sizes.begin() + static_cast<long>(len), last);
    if (last % 2 == 1 || run % 2 == 0) return "Case1";
  }
  bool middle_even = true;
  for (std::size_t i = 1; i + 1 < k; ++i) middle_even = middle_even && sizes[i] % 2 == 0;
  if (sizes[0] % 2 == 1 && sizes[k - 1] % 2 == 1 && middle_even) return "Case2";
  if (sizes[0] % 2 == 1 && middle_even && sizes[k - 1] % 2 == 0) return "Case3";
  return "none";
}

std::size_t form_kernel(const Model& m, const SigmaSplit& split, const SoCase& c, std::size_t split_at, PairOrder order,
                        std::vector<Vec>* vecs = nullptr) {
  std::vector<bool> first(m.partition.k(), false);
  for (std::size_t i = 0; i < split_at; ++i) first[i] = true;
  const TauSplit tau = tau_split_z(split, first);
  const Vec gamma = so_covector(m, split.gl, c, order);
  REQUIRE(vanishes(gamma, split.z1));
  return restricted_form_kernel({split.z, restrict_covector(gamma, split.z_in_gl)}, tau.h0, tau.h1, vecs);
}

}  // namespace

TEST_CASE("weight validation") {
  const Partition p({3, 2, 1});
  CHECK(gl_weights_violation(default_gl_weights(p), p).empty());
  CHECK(gl_weights_violation(weights({1, 2}), p).find("expected 3") != std::string::npos);
  CHECK(gl_weights_violation(weights({1, 0, 2}), p).find("nonzero") != std::string::npos);
  CHECK(gl_weights_violation(weights({1, 2, 1}), p).find("distinct") != std::string::npos);

  const Model sp = build_model(Partition({3, 3, 2}), AlgebraKind::Symplectic);
  CHECK(sp_weights_violation(default_sp_weights(sp), sp).empty());
  CHECK(sp_weights_violation(weights({1, 2, 3}), sp).find("opposite") != std::string::npos);
  CHECK(sp_weights_violation(weights({1, -1, 3}), sp).empty());
  const GlCentralizer gl = make_gl_centralizer(sp.partition);
  CHECK_THROWS_AS(alpha_sp(sp, gl, weights({1, 2, 3})), WeightError);
  CHECK_THROWS_AS(alpha_gl(gl, weights({1, 1, 2})), WeightError);
}

TEST_CASE("gl covector picks the top diagonal coefficients") {
  const GlCentralizer gl = make_gl_centralizer(Partition({3, 1}));
  const Vec a = alpha_gl(gl, weights({5, -7}));
  for (std::size_t u = 0; u < gl.basis.size(); ++u) {
    const BasisElt& x = gl.basis[u];
    const Scalar expected = x == BasisElt{0, 0, 2} ? Scalar(5) : x == BasisElt{1, 1, 0} ? Scalar(-7) : Scalar(0);
    CHECK(a[u] == expected);
  }
  const Vec c = coefficient_functional(gl, {1, 0, 2});
  CHECK(c[gl.position.at({1, 0, 2})] == 1);
  CHECK(std::count_if(c.begin(), c.end(), [](const Scalar& v) { return sgn(v) != 0; }) == 1);
}

TEST_CASE("sp covector vanishes on z1 and has a stabiliser of dimension n/2") {
  for (int n = 2; n <= 8; n += 2)
    for (const auto& p : partitions_of(n)) {
      if (!admissible(p, AlgebraKind::Symplectic)) continue;
      CAPTURE(p.to_string());
      const Model m = build_model(p, AlgebraKind::Symplectic);
      const SigmaSplit split = sigma_split(m);
      const Vec alpha = alpha_sp(m, split.gl, default_sp_weights(m));
      CHECK(vanishes(alpha, split.z1));
      const Subalgebra st = stabilizer(split.z, restrict_covector(alpha, split.z_in_gl));
      CHECK(st.dim() == static_cast<std::size_t>(n / 2));
      CHECK(st.dim() == index(*split.z));
    }
}

TEST_CASE("orthogonal case examples") {
  auto kind_of = [](std::vector<int> sizes) {
    return to_string(classify_so(build_model(Partition(std::move(sizes)), AlgebraKind::Orthogonal)).kind);
  };
  CHECK(kind_of({7}) == "RegularOdd");
  CHECK(kind_of({4, 4}) == "TwoEvenBlocks");
  CHECK(kind_of({5, 3}) == "Case2");
  CHECK(kind_of({3, 2, 2}) == "Case3");
  CHECK(kind_of({3, 2, 2, 1}) == "Case2");
  CHECK(kind_of({5, 4, 4, 2, 2}) == "Case3");
  // every block self-paired, so the leading pair of blocks already qualifies
  CHECK(kind_of({5, 3, 3, 1, 1}) == "Case1");
  const Model m = build_model(Partition({5, 3, 3, 1, 1}), AlgebraKind::Orthogonal);
  CHECK(classify_so(m).prefix == 2);
  CHECK(case1_prefixes(m) == std::vector<std::size_t>{2, 4});
  CHECK(case1_prefixes(build_model(Partition({4, 4}), AlgebraKind::Orthogonal)).empty());
  CHECK_THROWS(classify_so(build_model(Partition({2, 2}), AlgebraKind::Symplectic)));
}

TEST_CASE("exactly one case applies to every orthogonal partition") {
  for (const auto& m : so_models(11)) {
    CAPTURE(m.partition.to_string());
    const auto cases = applicable_so_cases(m);
    REQUIRE(cases.size() == 1);
    CHECK(to_string(cases.front().kind) == expected_case(m.partition.sizes()));
    for (std::size_t i = 0; i < m.partition.k(); ++i)
      CHECK((m.pairing.partner[i] == i) == (m.partition.size(i) % 2 == 1));
  }
}

TEST_CASE("self-paired functionals vanish on z1") {
  for (const auto& m : so_models(8)) {
    CAPTURE(m.partition.to_string());
    const SigmaSplit split = sigma_split(m);
    const int k = static_cast<int>(m.partition.k());
    for (int i = 0; i < k; ++i) {
      const bool self = m.pairing.partner[static_cast<std::size_t>(i)] == static_cast<std::size_t>(i);
      if (self && m.partition.d(static_cast<std::size_t>(i)) >= 1) CHECK(vanishes(beta_functional(m, split.gl, i), split.z1));
      if (!self) {
        CHECK(vanishes(gamma_sum(m, split.gl, i), split.z1));
        CHECK_THROWS_AS(beta_functional(m, split.gl, i), std::invalid_argument);
      } else {
        CHECK_THROWS_AS(gamma_sum(m, split.gl, i), std::invalid_argument);
      }
      for (int j = 0; j < k; ++j)
        if (i != j && self && m.pairing.partner[static_cast<std::size_t>(j)] == static_cast<std::size_t>(j))
          CHECK(vanishes(gamma_difference(m, split.gl, i, j), split.z1));
    }
  }
  const Model so3 = build_model(Partition({1, 1, 1}), AlgebraKind::Orthogonal);
  CHECK_THROWS_AS(beta_functional(so3, make_gl_centralizer(so3.partition), 0), std::invalid_argument);
}

TEST_CASE("two even blocks") {
  const Model m = build_model(Partition({4, 4}), AlgebraKind::Orthogonal);
  const SigmaSplit split = sigma_split(m);
  const Vec alpha = so_covector(m, split.gl, {SoCaseKind::TwoEvenBlocks});
  CHECK(vanishes(alpha, split.z1));
  const Subalgebra st = stabilizer(split.z, restrict_covector(alpha, split.z_in_gl));
  CHECK(st.dim() == 4);
  for (int s = 0; s <= 3; ++s) {
    const Vec x = split.gl.coords({{BasisElt{0, 0, s}, Scalar(1)}, {BasisElt{1, 1, s}, Scalar(s % 2 == 0 ? -1 : 1)}});
    REQUIRE(split.z_in_gl.contains(x));
    CHECK(st.contains(split.to_z(x)));
  }
}

TEST_CASE("leading-prefix form is nondegenerate for every prefix and pair order") {
  std::size_t tried = 0;
  for (const auto& m : so_models(9)) {
    if (classify_so(m).kind != SoCaseKind::Case1) continue;
    CAPTURE(m.partition.to_string());
    const SigmaSplit split = sigma_split(m);
    for (const std::size_t prefix : case1_prefixes(m))
      for (const auto order : {PairOrder::Consecutive, PairOrder::Nested}) {
        CHECK(form_kernel(m, split, {SoCaseKind::Case1, prefix}, prefix, order) == 0);
        ++tried;
      }
  }
  CHECK(tried > 20);
}

TEST_CASE("case 2 form has a one-dimensional kernel") {
  for (const auto& m : so_models(9)) {
    if (classify_so(m).kind != SoCaseKind::Case2) continue;
    CAPTURE(m.partition.to_string());
    const SigmaSplit split = sigma_split(m);
    const int k = static_cast<int>(m.partition.k());
    std::vector<Vec> vecs;
    REQUIRE(form_kernel(m, split, {SoCaseKind::Case2}, m.partition.k() - 1, PairOrder::Consecutive, &vecs) == 1);
    const Vec generator = split.gl.coords({{BasisElt{k - 1, 0, m.partition.d(0)}, Scalar(1)},
                                           {BasisElt{0, k - 1, m.partition.d(m.partition.k() - 1)}, Scalar(-1)}});
    const Vec found = split.to_gl(vecs[0]);
    // proportional to the generator
    std::size_t lead = 0;
    while (sgn(generator[lead]) == 0) ++lead;
    const Scalar ratio = found[lead] / generator[lead];
    for (std::size_t u = 0; u < found.size(); ++u) CHECK(found[u] == ratio * generator[u]);
  }
}

TEST_CASE("case 3 labels and step bounds") {
  std::size_t tried = 0;
  for (const auto& m : so_models(11)) {
    if (classify_so(m).kind != SoCaseKind::Case3) continue;
    CAPTURE(m.partition.to_string());
    const auto labels = case3_labels(m);
    CHECK(labels[0] == 0);
    CHECK(case3_normalisation_violation(m, labels).empty());
    const SigmaSplit split = sigma_split(m);
    const StepFiltration f = step_filtration_bounds(m, split);
    CHECK(f.graded);
    CHECK(f.positive_steps_vanish);
    CHECK(f.bounds_hold);
    CHECK(f.stabiliser_dim == static_cast<std::size_t>(m.partition.n() / 2));
    ++tried;
  }
  CHECK(tried >= 3);

  const Model m = build_model(Partition({3, 2, 2}), AlgebraKind::Orthogonal);
  auto labels = case3_labels(m);
  std::swap(labels[1], labels[2]);
  CHECK_FALSE(case3_normalisation_violation(m, labels).empty());
  CHECK_FALSE(case3_normalisation_violation(m, {0, 1}).empty());
}

TEST_CASE("case mismatches are rejected") {
  const Model so8 = build_model(Partition({5, 3}), AlgebraKind::Orthogonal);
  const GlCentralizer gl = make_gl_centralizer(so8.partition);
  CHECK_THROWS_AS(so_covector(so8, gl, {SoCaseKind::Case3}), CaseMismatch);
  CHECK_THROWS_AS(case3_labels(so8), CaseMismatch);
  const Model c1 = build_model(Partition({5, 3, 3, 1, 1}), AlgebraKind::Orthogonal);
  const GlCentralizer gl1 = make_gl_centralizer(c1.partition);
  CHECK_NOTHROW(so_covector(c1, gl1, {SoCaseKind::Case1, 4}));
  CHECK_THROWS_AS(so_covector(c1, gl1, {SoCaseKind::Case1, 3}), CaseMismatch);
  CHECK(so_covector(build_model(Partition({7}), AlgebraKind::Orthogonal), make_gl_centralizer(Partition({7})),
                    {SoCaseKind::RegularOdd}) == Vec(7));
}

TEST_CASE("tau splitting") {
  const GlCentralizer gl = make_gl_centralizer(Partition({2, 1}));
  const TauSplit t = tau_split_gl(gl, {true, false});
  // diagonal blocks are tau-even, the mixed ones odd
  CHECK(t.h0.dim() == 3);
  CHECK(t.h1.dim() == 2);
  CHECK(t.h1.contains(gl.coords({{BasisElt{0, 1, 0}, Scalar(1)}})));
}
