#include "nilcent/genstab.hpp"

#include <random>

namespace nilcent {

Subalgebra bracket_with_algebra(const Subalgebra& h) { return bracket_span(h, whole(h.parent_ptr())); }

GenStabReport is_generic_stabilizer(const Subalgebra& h) {
  if (!h.is_closed()) throw std::invalid_argument("is_generic_stabilizer: h is not a subalgebra");
  GenStabReport r;
  r.algebra = h.parent().name();
  r.dim_g = h.parent().dim();
  r.dim_h = h.dim();
  const Subalgebra meet = intersect(bracket_with_algebra(h), h);
  r.intersection_dim = meet.dim();
  r.criterion_holds = meet.dim() == 0;
  if (!r.criterion_holds) r.witness = meet.element(0);
  return r;
}

namespace {

std::vector<Vec> units_where(const GlCentralizer& gl, bool diagonal) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < gl.basis.size(); ++k)
    if ((gl.basis[k].i == gl.basis[k].j) == diagonal) {
      Vec v(gl.basis.size());
      v[k] = 1;
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace

HmDecomposition hm_decomposition(const Partition& p) {
  GlCentralizer gl = make_gl_centralizer(p);
  Subalgebra h(gl.algebra, units_where(gl, true));
  Subalgebra m(gl.algebra, units_where(gl, false));
  const bool direct = h.dim() + m.dim() == gl.basis.size() && intersect(h, m).dim() == 0;
  const bool invariant = m.contains(bracket_span(h, m));
  return {std::move(gl), std::move(h), std::move(m), direct, invariant};
}

TorusReport torus_and_normalizer(const Partition& p) {
  const GlCentralizer gl = make_gl_centralizer(p);
  std::vector<Vec> tor;
  for (int i = 0; i < static_cast<int>(p.k()); ++i) tor.push_back(gl.coords({{BasisElt{i, i, 0}, 1}}));
  const Subalgebra t(gl.algebra, tor);
  const Subalgebra h(gl.algebra, units_where(gl, true));
  const Subalgebra ct = centralizer_of(t);
  const Subalgebra nh = normalizer_of(h);

  TorusReport r;
  r.dim_t = t.dim();
  r.dim_h = h.dim();
  r.dim_centralizer = ct.dim();
  r.dim_normalizer = nh.dim();
  r.t_in_h = h.contains(t);
  r.centralizer_is_h = ct.same_space(h);
  r.normalizer_is_h = nh.same_space(h);
  r.weights_ok = true;
  for (const auto& x : gl.basis) {
    if (x.i == x.j) continue;
    // Distinct weights per block: t_i = 2i + 3.
    const Scalar ti = 2 * x.i + 3, tj = 2 * x.j + 3;
    const CoeffTable torus{{BasisElt{x.i, x.i, 0}, ti}, {BasisElt{x.j, x.j, 0}, tj}};
    const CoeffTable expected{{x, tj - ti}};
    if (bracket(torus, {{x, 1}}, p) != expected) r.weights_ok = false;
  }
  return r;
}

bool CounterexampleReport::all_pass() const {
  for (const auto& f : facts)
    if (!f.pass) return false;
  return true;
}

SampleStats sample_criterion(const AlgebraPtr& g, std::size_t index_g, std::size_t samples, std::uint64_t seed) {
  SampleStats s;
  s.seed = seed;
  std::mt19937_64 rng(seed);
  const std::size_t max_draws = 50 * samples + 50;
  while (s.samples < samples && s.draws < max_draws) {
    ++s.draws;
    const Subalgebra stab = stabilizer(g, random_point(g->dim(), rng));
    if (stab.dim() != index_g) continue;
    ++s.samples;
    if (is_generic_stabilizer(stab).criterion_holds) ++s.criterion_passes;
  }
  return s;
}

namespace {

FactCheck count_fact(std::string name, std::size_t expected, std::size_t actual) {
  return {std::move(name), std::to_string(expected), std::to_string(actual), expected == actual};
}

FactCheck bool_fact(std::string name, bool actual) {
  return {std::move(name), "true", actual ? "true" : "false", actual};
}

}  // namespace

CounterexampleReport so8_counterexample(std::size_t samples, std::uint64_t seed) {
  const Partition p({5, 3});
  const Model model = build_model(p, AlgebraKind::Orthogonal);
  const SigmaSplit split = sigma_split(model);
  const GlCentralizer& gl = split.gl;

  // Stored block 0 has size 5 and stored block 1 has size 3; the facts use
  // block 1 for the size-3 block.
  auto xi = [](int i, int j, int s) {
    auto stored = [](int b) { return b == 1 ? 1 : 0; };
    return BasisElt{stored(i), stored(j), s};
  };
  auto in_z = [&](const CoeffTable& phi) { return split.to_z(gl.coords(phi)); };

  const Vec e = in_z(coefficients(model.e, p));
  const Vec e3 = in_z({{xi(2, 2, 3), 1}});
  const Vec phi3 = in_z({{xi(1, 2, 4), 1}, {xi(2, 1, 2), -1}});
  const Vec phi2 = in_z({{xi(1, 2, 3), 1}, {xi(2, 1, 1), 1}});

  const AlgebraPtr& z = split.z;
  const Subalgebra zc = center(z);
  const Subalgebra stated_center(z, std::vector<Vec>{e, e3, phi3});
  const Subalgebra phi2_line(z, std::vector<Vec>{phi2});
  const Subalgebra image = bracket_span(phi2_line, whole(z));
  const Subalgebra stated_image(z, std::vector<Vec>{e3, phi3});
  const Subalgebra cent_phi2 = centralizer_of(phi2_line);
  const Subalgebra stated_cent(z, std::vector<Vec>{e, e3, phi3, phi2});
  const GenStabReport crit = is_generic_stabilizer(cent_phi2);
  const std::size_t ind = index(*z);

  CounterexampleReport r;
  r.algebra = "so_8 [5,3]";
  r.facts.push_back(count_fact("dim z(e)", 6, z->dim()));
  r.facts.push_back(count_fact("index z(e)", 4, ind));
  r.facts.push_back(count_fact("dim center", 3, zc.dim()));
  r.facts.push_back(bool_fact("center = span{e, e^3 = xi_2^{2,3}, phi_3 = xi_1^{2,4} - xi_2^{1,2}}",
                              zc.same_space(stated_center)));
  r.facts.push_back(count_fact("dim [phi_2, z(e)] for phi_2 = xi_1^{2,3} + xi_2^{1,1}", 2, image.dim()));
  r.facts.push_back(bool_fact("[phi_2, z(e)] = span{e^3, phi_3}", image.same_space(stated_image)));
  r.facts.push_back(bool_fact("[phi_2, z(e)] inside the center", zc.contains(image)));
  r.facts.push_back(count_fact("dim z(e)_{phi_2}", 4, cent_phi2.dim()));
  r.facts.push_back(bool_fact("z(e)_{phi_2} = span{e, e^3, phi_3, phi_2}", cent_phi2.same_space(stated_cent)));
  r.facts.push_back(bool_fact("criterion fails for z(e)_{phi_2}", !crit.criterion_holds));
  r.facts.push_back(bool_fact("criterion witness lies in the center", crit.witness && zc.contains(*crit.witness)));
  r.sampling = sample_criterion(z, ind, samples, seed);
  return r;
}

CounterexampleReport so9_extension(std::size_t samples, std::uint64_t seed) {
  const Model model = build_model(Partition({5, 3, 1}), AlgebraKind::Orthogonal);
  const SigmaSplit split = sigma_split(model);
  const std::size_t ind = index(*split.z);
  CounterexampleReport r;
  r.algebra = "so_9 [5,3,1]";
  r.experimental = true;
  r.facts.push_back(count_fact("index z(e)", 4, ind));
  r.sampling = sample_criterion(split.z, ind, samples, seed);
  return r;
}

}  // namespace nilcent
