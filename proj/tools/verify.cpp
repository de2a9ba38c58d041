#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "nilcent/indexcalc.hpp"

namespace nilcent {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "model_invariants",
      "centralizer_dimension",
      "shift_range_oracle",
      "bracket_oracle",
      "jacobi",
      "kirillov_skew",
      "generic_rank_oracle",
      "slice_certificate",
      "index_equals_rank",
      "vinberg_inequality",
      "sigma_split",
      "form_variant_independence",
      "gl_stabilizer_block_preserving",
      "gl_stabilizer_weight_independent",
      "gl_first_block_form_kernel",
      "gl_hm_decomposition",
      "gl_torus_normalizer",
      "sp_covector_vanishes_on_z1",
      "sp_stabilizer_dim",
      "stabilizer_restriction",
      "generic_stabilizer_criterion",
      "criterion_soundness",
      "so_case_unique",
      "so_fixed_basis",
      "so_functionals_vanish_on_z1",
      "so_regular_abelian",
      "so_two_even_blocks_stabilizer",
      "so_case1_form_kernel",
      "so_case2_form_kernel",
      "so_case3_labels",
      "so_case3_step_bounds",
      "so8_subregular_facts",
  };
  return names;
}

Weights parse_weights(const std::string& text) {
  Weights w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ParseError("weights: empty entry in \"" + text + "\"");
    try {
      w.a.push_back(parse_scalar(item.substr(b, e - b + 1)));
    } catch (const std::exception&) {
      throw ParseError("weights: cannot parse \"" + item + "\"");
    }
  }
  if (w.a.empty()) throw ParseError("weights: no entries");
  return w;
}

namespace {

using Outcome = std::pair<bool, std::string>;

class Battery {
 public:
  void run(const std::string& name, const std::function<Outcome()>& check) {
    try {
      auto [ok, detail] = check();
      set(name, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail));
    } catch (const std::exception& e) {
      set(name, CheckStatus::Fail, std::string("exception: ") + e.what());
    }
  }
  void skip(const std::string& name, std::string reason) { set(name, CheckStatus::Skipped, std::move(reason)); }

  std::vector<CheckResult> finish(const std::string& context) const {
    std::vector<CheckResult> out;
    for (const auto& name : check_names()) {
      auto it = results_.find(name);
      if (it != results_.end())
        out.push_back(it->second);
      else
        out.push_back({name, CheckStatus::Skipped, "not applicable to " + context});
    }
    return out;
  }

 private:
  void set(const std::string& name, CheckStatus s, std::string detail) { results_[name] = {name, s, std::move(detail)}; }
  std::map<std::string, CheckResult> results_;
};

std::string dims(std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

QMat ad_e(const QMat& e) {
  const std::size_t n = e.rows();
  QMat ad(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t col = a * n + b;
      // e E_ab - E_ab e
      for (std::size_t r = 0; r < n; ++r) ad(r * n + b, col) += e(r, a);
      for (std::size_t c = 0; c < n; ++c) ad(a * n + c, col) -= e(b, c);
    }
  return ad;
}

Vec flatten(const QMat& m) { return m.entries(); }

bool vanishes_on(const Vec& functional, const Subalgebra& s) {
  for (const auto& x : s.elements())
    if (sgn(dot(functional, x)) != 0) return false;
  return true;
}

Subalgebra lift(const SigmaSplit& split, const Subalgebra& in_z) {
  std::vector<Vec> rows;
  for (const auto& v : in_z.elements()) rows.push_back(split.to_gl(v));
  return Subalgebra(split.gl.algebra, rows);
}

Subalgebra units(const GlCentralizer& gl, const std::function<bool(const BasisElt&)>& keep) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < gl.basis.size(); ++k)
    if (keep(gl.basis[k])) {
      Vec v(gl.basis.size());
      v[k] = 1;
      rows.push_back(std::move(v));
    }
  return Subalgebra(gl.algebra, rows);
}

CoeffTable random_table(const GlCentralizer& gl, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  CoeffTable t;
  for (const auto& x : gl.basis)
    if (const int c = dist(rng); c != 0) t[x] = c;
  return t;
}

Outcome bracket_oracle(const GlCentralizer& gl, std::size_t pairs, std::mt19937_64& rng) {
  const Partition& p = gl.partition;
  for (std::size_t t = 0; t < pairs; ++t) {
    const CoeffTable a = random_table(gl, rng), b = random_table(gl, rng);
    const CoeffTable closed = bracket(a, b, p);
    const QMat A = realise(p, a), B = realise(p, b);
    if (coefficients(A * B - B * A, p) != closed)
      return {false, "closed form differs from the matrix commutator on pair " + std::to_string(t)};
    if (gl.algebra->bracket(gl.coords(a), gl.coords(b)) != gl.coords(closed))
      return {false, "structure constants differ from the closed form on pair " + std::to_string(t)};
  }
  return {true, std::to_string(pairs) + " random pairs"};
}

/// [xi_j^{t,b}, xi_i^{i,s}] against the table xi_i^{t,s+b} (i = j != t),
/// -xi_j^{i,s+b} (i = t != j), 0 otherwise.
Outcome hm_bracket_table(const GlCentralizer& gl) {
  const Partition& p = gl.partition;
  for (const auto& h : gl.basis) {
    if (h.i != h.j) continue;
    const int i = h.i, s = h.s;
    for (const auto& y : gl.basis) {
      const int j = y.i, t = y.j, b = y.s;
      CoeffTable expected;
      if (i == j && i != t) {
        const BasisElt r{i, t, s + b};
        if (in_range(p, r)) expected[r] = 1;
      } else if (i == t && i != j) {
        const BasisElt r{j, i, s + b};
        if (in_range(p, r)) expected[r] = -1;
      }
      if (bracket({{y, 1}}, {{h, 1}}, p) != expected) return {false, "[" + label(y) + ", " + label(h) + "] differs from the table"};
    }
  }
  return {true, ""};
}

Outcome criterion_soundness(const AlgebraPtr& g, const Subalgebra& h, std::mt19937_64& rng) {
  const std::size_t trials = 20;
  std::size_t equal = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t d = stabilizer(g, random_point(g->dim(), rng)).dim();
    if (d < h.dim()) return {false, "random covector with stabiliser dim " + dims(d, h.dim())};
    if (d == h.dim()) ++equal;
  }
  return {2 * equal > trials, std::to_string(equal) + "/" + std::to_string(trials) + " random stabilisers of dim " + std::to_string(h.dim())};
}

Outcome criterion_check(const Subalgebra& h) {
  const GenStabReport r = is_generic_stabilizer(h);
  if (r.criterion_holds) return {true, "[h, g] ∩ h = 0 with dim h = " + std::to_string(r.dim_h)};
  const bool valid = r.witness && !is_zero(*r.witness) && h.contains(*r.witness) && bracket_with_algebra(h).contains(*r.witness);
  return {false, "intersection of dim " + std::to_string(r.intersection_dim) + (valid ? "" : ", witness invalid")};
}

std::vector<std::pair<std::string, Scalar>> nonzero_entries(const GlCentralizer& gl, const Vec& v) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) out.emplace_back(label(gl.basis[k]), v[k]);
  return out;
}

int expected_index(AlgebraKind kind, int n) { return kind == AlgebraKind::GeneralLinear ? n : n / 2; }

void common_checks(Battery& bat, const Model& model, const GlCentralizer& gl, const AlgebraPtr& z, const IndexCertificate& cert,
                   const VerifyOptions& opt, std::mt19937_64& rng) {
  const Partition& p = model.partition;
  bat.run("model_invariants", [&]() -> Outcome {
    const std::string v = model_violation(model);
    return {v.empty(), v};
  });
  bat.run("centralizer_dimension", [&]() -> Outcome {
    const std::size_t n2 = static_cast<std::size_t>(p.n()) * static_cast<std::size_t>(p.n());
    const std::size_t kernel = n2 - rank(ad_e(model.e));
    const std::size_t formula = gl_centralizer_dimension(p);
    return {gl.basis.size() == kernel && formula == kernel,
            "basis " + std::to_string(gl.basis.size()) + ", formula " + std::to_string(formula) + ", ker ad(e) " +
                std::to_string(kernel)};
  });
  bat.run("shift_range_oracle", [&]() -> Outcome {
    std::vector<Vec> rows;
    for (const auto& x : gl.basis) {
      const QMat m = realise(p, x);
      if (!(model.e * m == m * model.e)) return {false, label(x) + " does not commute with e"};
      rows.push_back(flatten(m));
    }
    const std::size_t r = rank(from_rows(rows, static_cast<std::size_t>(p.n() * p.n())));
    return {r == gl.basis.size(), "independent generators " + dims(r, gl.basis.size())};
  });
  bat.run("bracket_oracle", [&]() { return bracket_oracle(gl, opt.samples, rng); });
  bat.run("jacobi", [&]() -> Outcome {
    const std::string v = z->jacobi_violation();
    return {v.empty(), v};
  });
  bat.run("kirillov_skew", [&]() -> Outcome {
    const PolyMat b = kirillov_matrix(*z);
    for (std::size_t u = 0; u < b.rows(); ++u)
      for (std::size_t v = u; v < b.cols(); ++v)
        if (!(b(u, v) == -b(v, u))) return {false, "entry " + std::to_string(u) + "," + std::to_string(v)};
    return {true, ""};
  });
  bat.run("generic_rank_oracle", [&]() -> Outcome {
    std::size_t best = 0;
    for (int t = 0; t < 20; ++t) best = std::max(best, rank(kirillov_at(*z, random_point(z->dim(), rng))));
    return {best == cert.generic_rank, "symbolic " + std::to_string(cert.generic_rank) + ", max over 20 covectors " + std::to_string(best)};
  });
  bat.run("slice_certificate", [&]() -> Outcome {
    return {slice_is_transversal(*z, cert.slice),
            std::to_string(cert.slice.coords.size()) + " of " + std::to_string(z->dim()) + " dual coordinates"};
  });
  bat.run("index_equals_rank", [&]() -> Outcome {
    const int expected = expected_index(model.kind, p.n());
    return {cert.index == static_cast<std::size_t>(expected), "index " + dims(cert.index, static_cast<std::size_t>(expected))};
  });
  bat.run("vinberg_inequality", [&]() -> Outcome {
    const int rk = classical_rank(model.kind, p.n());
    return {cert.index >= static_cast<std::size_t>(rk), "index " + std::to_string(cert.index) + " >= rank " + std::to_string(rk)};
  });
}

void gl_checks(Battery& bat, const GlCentralizer& gl, const Weights& w, VerifyReport& rep, std::mt19937_64& rng) {
  const Partition& p = gl.partition;
  const Vec alpha = alpha_gl(gl, w);
  rep.covector = nonzero_entries(gl, alpha);
  const Subalgebra stab = stabilizer(gl.algebra, alpha);
  rep.paper_covector_stab_dim = stab.dim();
  const Subalgebra h = units(gl, [](const BasisElt& x) { return x.i == x.j; });

  bat.run("gl_stabilizer_block_preserving", [&]() -> Outcome {
    return {stab.same_space(h) && stab.dim() == static_cast<std::size_t>(p.n()),
            "dim " + std::to_string(stab.dim()) + (stab.same_space(h) ? ", equals span xi_i^{i,s}" : ", differs from span xi_i^{i,s}")};
  });
  bat.run("gl_stabilizer_weight_independent", [&]() -> Outcome {
    Weights other;
    for (std::size_t i = 0; i < p.k(); ++i) other.a.push_back(-Scalar(static_cast<long>((i + 1) * (i + 2))));
    const Subalgebra s2 = stabilizer(gl.algebra, alpha_gl(gl, other));
    return {s2.same_space(stab), ""};
  });
  bat.run("gl_first_block_form_kernel", [&]() -> Outcome {
    std::vector<bool> first(p.k(), false);
    first[0] = true;
    const TauSplit split = tau_split_gl(gl, first);
    const Vec gamma = coefficient_functional(gl, {0, 0, p.d(0)});
    const std::size_t ker = restricted_form_kernel({gl.algebra, gamma}, split.h0, split.h1);
    return {ker == 0, "kernel dim " + std::to_string(ker) + " on h1 of dim " + std::to_string(split.h1.dim())};
  });
  bat.run("gl_hm_decomposition", [&]() -> Outcome {
    const HmDecomposition hm = hm_decomposition(p);
    if (!hm.direct_sum) return {false, "h + m is not direct"};
    if (!hm.m_invariant) return {false, "[h, m] not inside m"};
    return hm_bracket_table(gl);
  });
  bat.run("gl_torus_normalizer", [&]() -> Outcome {
    const TorusReport t = torus_and_normalizer(p);
    const bool ok = t.t_in_h && t.centralizer_is_h && t.normalizer_is_h && t.weights_ok && t.dim_t == p.k();
    return {ok, "dim t " + std::to_string(t.dim_t) + ", centraliser " + std::to_string(t.dim_centralizer) + ", normaliser " +
                    std::to_string(t.dim_normalizer) + (t.weights_ok ? "" : ", weight check failed")};
  });
  bat.run("generic_stabilizer_criterion", [&]() { return criterion_check(stab); });
  if (is_generic_stabilizer(stab).criterion_holds)
    bat.run("criterion_soundness", [&]() { return criterion_soundness(gl.algebra, stab, rng); });
  else
    bat.skip("criterion_soundness", "criterion does not hold");
}

Outcome restriction_check(const SigmaSplit& split, const Vec& alpha, const Subalgebra& stab_z) {
  if (!vanishes_on(alpha, split.z1)) return {false, "ambient covector does not vanish on z1"};
  const Subalgebra ambient = stabilizer(split.gl.algebra, alpha);
  const Subalgebra meet = intersect(ambient, split.z_in_gl);
  return {lift(split, stab_z).same_space(meet), "dim " + std::to_string(stab_z.dim())};
}

void form_checks(Battery& bat, const Model& model, const SigmaSplit& split, const IndexCertificate& cert,
                 const std::function<std::optional<std::size_t>(const Model&, const SigmaSplit&)>& stab_dim) {
  bat.run("sigma_split", [&]() -> Outcome {
    const std::size_t d = split.gl.basis.size();
    if (!(split.sigma * split.sigma == identity(d))) return {false, "sigma is not an involution"};
    if (split.z_in_gl.dim() + split.z1.dim() != d || intersect(split.z_in_gl, split.z1).dim() != 0)
      return {false, "z + z1 is not direct"};
    if (!split.z_in_gl.contains(bracket_span(split.z_in_gl, split.z_in_gl))) return {false, "[z, z] not inside z"};
    if (!split.z1.contains(bracket_span(split.z_in_gl, split.z1))) return {false, "[z, z1] not inside z1"};
    if (!split.z_in_gl.contains(bracket_span(split.z1, split.z1))) return {false, "[z1, z1] not inside z"};
    return {true, "dim z " + std::to_string(split.z_in_gl.dim()) + ", dim z1 " + std::to_string(split.z1.dim())};
  });
  bat.run("form_variant_independence", [&]() -> Outcome {
    const Model alt = build_model(model.partition, model.kind, FormVariant::Alternate);
    const std::string v = model_violation(alt);
    if (!v.empty()) return {false, "alternate form: " + v};
    const SigmaSplit s2 = sigma_split(alt);
    const std::size_t i2 = index(*s2.z);
    const auto d1 = stab_dim(model, split), d2 = stab_dim(alt, s2);
    const bool ok = s2.z->dim() == split.z->dim() && i2 == cert.index && d1 == d2;
    return {ok, "dim z " + dims(split.z->dim(), s2.z->dim()) + ", index " + dims(cert.index, i2)};
  });
}

std::optional<std::size_t> sp_stab_dim(const Model& m, const SigmaSplit& s) {
  const Vec alpha = alpha_sp(m, s.gl, default_sp_weights(m));
  return stabilizer(s.z, restrict_covector(alpha, s.z_in_gl)).dim();
}

std::optional<std::size_t> so_stab_dim(const Model& m, const SigmaSplit& s) {
  const SoCase c = classify_so(m);
  if (c.kind == SoCaseKind::Case1 || c.kind == SoCaseKind::Case2) return std::nullopt;
  return stabilizer(s.z, restrict_covector(so_covector(m, s.gl, c), s.z_in_gl)).dim();
}

void sp_checks(Battery& bat, const Model& model, const SigmaSplit& split, const Weights& w, VerifyReport& rep,
               std::mt19937_64& rng) {
  const Partition& p = model.partition;
  const Vec alpha = alpha_sp(model, split.gl, w);
  rep.covector = nonzero_entries(split.gl, alpha);
  const Subalgebra stab = stabilizer(split.z, restrict_covector(alpha, split.z_in_gl));
  rep.paper_covector_stab_dim = stab.dim();

  bat.run("sp_covector_vanishes_on_z1", [&]() -> Outcome { return {vanishes_on(alpha, split.z1), ""}; });
  bat.run("sp_stabilizer_dim", [&]() -> Outcome {
    const std::size_t half = static_cast<std::size_t>(p.n() / 2);
    const Subalgebra h = units(split.gl, [](const BasisElt& x) { return x.i == x.j; });
    const bool fixed_part = lift(split, stab).same_space(intersect(h, split.z_in_gl));
    return {stab.dim() == half && fixed_part,
            "dim " + dims(stab.dim(), half) + (fixed_part ? ", equals h ∩ z" : ", differs from h ∩ z")};
  });
  bat.run("stabilizer_restriction", [&]() { return restriction_check(split, alpha, stab); });
  bat.run("generic_stabilizer_criterion", [&]() { return criterion_check(stab); });
  if (is_generic_stabilizer(stab).criterion_holds)
    bat.run("criterion_soundness", [&]() { return criterion_soundness(split.z, stab, rng); });
  else
    bat.skip("criterion_soundness", "criterion does not hold");
}

Outcome so_fixed_basis_check(const Model& model, const SigmaSplit& split) {
  const auto fixed = so_fixed_basis(model);
  const GlCentralizer& gl = split.gl;
  std::vector<Vec> rows;
  for (const auto& f : fixed) {
    if (f.element.empty() || f.element.size() > 2) return {false, f.label + " has support of size " + std::to_string(f.element.size())};
    if (f.element.size() == 2) {
      const BasisElt a = f.element.begin()->first, b = std::next(f.element.begin())->first;
      const auto star = [&](int i) { return static_cast<int>(model.pairing.partner[static_cast<std::size_t>(i)]); };
      if (!(b.i == star(a.j) && b.j == star(a.i)) && !(a.i == star(b.j) && a.j == star(b.i)))
        return {false, f.label + " is not supported on a sigma pair"};
    }
    const Vec v = gl.coords(f.element);
    if (!split.z_in_gl.contains(v)) return {false, f.label + " is not sigma-fixed"};
    rows.push_back(v);
  }
  const Subalgebra span(gl.algebra, rows);
  return {fixed.size() == split.z->dim() && span.same_space(split.z_in_gl), std::to_string(fixed.size()) + " elements"};
}

Outcome so_vanishing_check(const Model& model, const SigmaSplit& split) {
  const GlCentralizer& gl = split.gl;
  const int k = static_cast<int>(model.partition.k());
  std::size_t count = 0;
  auto test = [&](const Vec& f, const std::string& what) -> bool {
    ++count;
    if (vanishes_on(f, split.z1)) return true;
    throw std::runtime_error(what + " does not vanish on z1");
  };
  for (int i = 0; i < k; ++i) {
    const bool self = model.pairing.self_paired(static_cast<std::size_t>(i));
    if (self && model.partition.d(static_cast<std::size_t>(i)) >= 1) test(beta_functional(model, gl, i), "beta_" + std::to_string(i + 1));
    if (!self) test(gamma_sum(model, gl, i), "gamma sum at block " + std::to_string(i + 1));
    for (int j = i + 1; j < k; ++j)
      if (self && model.pairing.self_paired(static_cast<std::size_t>(j)))
        test(gamma_difference(model, gl, i, j), "gamma difference at blocks " + std::to_string(i + 1) + "," + std::to_string(j + 1));
  }
  return {true, std::to_string(count) + " functionals"};
}

void so_checks(Battery& bat, const Model& model, const SigmaSplit& split, VerifyReport& rep) {
  const Partition& p = model.partition;
  const GlCentralizer& gl = split.gl;
  const int k = static_cast<int>(p.k());

  bat.run("so_fixed_basis", [&]() { return so_fixed_basis_check(model, split); });
  bat.run("so_functionals_vanish_on_z1", [&]() { return so_vanishing_check(model, split); });
  bat.skip("generic_stabilizer_criterion", "no claim for orthogonal algebras");
  bat.skip("criterion_soundness", "no claim for orthogonal algebras");

  const auto cases = applicable_so_cases(model);
  bat.run("so_case_unique", [&]() -> Outcome {
    std::string names;
    for (const auto& c : cases) names += (names.empty() ? "" : ",") + to_string(c.kind);
    return {cases.size() == 1, names.empty() ? "no case applies" : names};
  });
  if (cases.size() != 1) return;
  const SoCase c = cases.front();
  rep.so_case = to_string(c.kind);

  if (c.kind == SoCaseKind::Case1 || c.kind == SoCaseKind::Case2) {
    bat.skip("stabilizer_restriction", "case " + to_string(c.kind) + " has no stabiliser covector");
    // tau is +1 on the first `split_at` blocks and -1 on the rest.
    auto kernel = [&](const SoCase& sc, std::size_t split_at, PairOrder order, std::vector<Vec>* vecs) {
      std::vector<bool> first(p.k(), false);
      for (std::size_t i = 0; i < split_at; ++i) first[i] = true;
      const TauSplit tau = tau_split_z(split, first);
      const Vec gamma = so_covector(model, gl, sc, order);
      if (!vanishes_on(gamma, split.z1)) throw std::runtime_error("gamma does not vanish on z1");
      return restricted_form_kernel({split.z, restrict_covector(gamma, split.z_in_gl)}, tau.h0, tau.h1, vecs);
    };
    if (c.kind == SoCaseKind::Case1) {
      bat.run("so_case1_form_kernel", [&]() -> Outcome {
        std::string detail;
        bool ok = true;
        for (const std::size_t prefix : case1_prefixes(model)) {
          const SoCase sc{SoCaseKind::Case1, prefix};
          const std::size_t a = kernel(sc, prefix, PairOrder::Consecutive, nullptr);
          const std::size_t b = kernel(sc, prefix, PairOrder::Nested, nullptr);
          ok = ok && a == 0 && b == 0;
          detail += (detail.empty() ? "" : "; ") + std::string("prefix ") + std::to_string(prefix) + ": kernel dims " +
                    std::to_string(a) + ", " + std::to_string(b);
        }
        return {ok, detail + " (consecutive, nested pairs)"};
      });
    } else {
      bat.run("so_case2_form_kernel", [&]() -> Outcome {
        std::vector<Vec> vecs;
        const std::size_t d = kernel(c, p.k() - 1, PairOrder::Consecutive, &vecs);
        if (d != 1) return {false, "kernel dim " + std::to_string(d)};
        const Vec expected = gl.coords({{BasisElt{k - 1, 0, p.d(0)}, 1}, {BasisElt{0, k - 1, p.d(static_cast<std::size_t>(k - 1))}, -1}});
        const bool same = Subalgebra(gl.algebra, std::vector<Vec>{split.to_gl(vecs[0])})
                              .same_space(Subalgebra(gl.algebra, std::vector<Vec>{expected}));
        const std::string gen = label({k - 1, 0, p.d(0)}) + " - " + label({0, k - 1, p.d(static_cast<std::size_t>(k - 1))});
        return {same, "kernel dim 1, " + std::string(same ? "generated by " : "not generated by ") + gen};
      });
    }
    return;
  }

  const Vec alpha = so_covector(model, gl, c);
  rep.covector = nonzero_entries(gl, alpha);
  const Subalgebra stab = stabilizer(split.z, restrict_covector(alpha, split.z_in_gl));
  rep.paper_covector_stab_dim = stab.dim();
  if (vanishes_on(alpha, split.z1))
    bat.run("stabilizer_restriction", [&]() { return restriction_check(split, alpha, stab); });
  else
    bat.skip("stabilizer_restriction", "ambient covector does not vanish on z1");

  switch (c.kind) {
    case SoCaseKind::RegularOdd:
      bat.run("so_regular_abelian", [&]() -> Outcome {
        const std::size_t m = static_cast<std::size_t>(p.n() / 2);
        return {split.z->is_abelian() && split.z->dim() == m && stab.dim() == m,
                std::string(split.z->is_abelian() ? "abelian" : "not abelian") + ", dim " + dims(split.z->dim(), m)};
      });
      break;
    case SoCaseKind::TwoEvenBlocks:
      bat.run("so_two_even_blocks_stabilizer", [&]() -> Outcome {
        const std::size_t two_d = static_cast<std::size_t>(p.size(0));
        std::vector<Vec> rows;
        for (int s = 0; s <= p.d(0); ++s) rows.push_back(gl.coords({{BasisElt{0, 0, s}, 1}, {BasisElt{1, 1, s}, s % 2 == 0 ? -1 : 1}}));
        const Subalgebra stated(gl.algebra, rows);
        const bool same = lift(split, stab).same_space(stated);
        return {stab.dim() == two_d && same,
                "dim " + dims(stab.dim(), two_d) + (same ? ", spanned by xi_1^{1,s} + (-1)^{s+1} xi_2^{2,s}" : ", basis differs")};
      });
      break;
    case SoCaseKind::Case3:
      bat.run("so_case3_labels", [&]() -> Outcome {
        const std::string v = case3_normalisation_violation(model, case3_labels(model));
        return {v.empty(), v};
      });
      bat.run("so_case3_step_bounds", [&]() -> Outcome {
        if (!vanishes_on(alpha, split.z1)) return {false, "covector does not vanish on z1"};
        const StepFiltration f = step_filtration_bounds(model, split);
        std::string detail;
        for (const auto& b : f.bounds)
          detail += (detail.empty() ? "" : ", ") + std::string("dim Phi_") + std::to_string(-b.q) + " = " + std::to_string(b.dim) + " <= " + to_string(b.bound);
        const std::size_t half = static_cast<std::size_t>(p.n() / 2);
        const bool ok = f.positive_steps_vanish && f.graded && f.bounds_hold && f.stabiliser_dim == half;
        return {ok, detail + ", total " + dims(f.stabiliser_dim, half)};
      });
      break;
    default:
      break;
  }
}

}  // namespace

VerifyReport verify(AlgebraKind kind, const Partition& p, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const Model model = build_model(p, kind);
  VerifyReport rep;
  rep.kind = kind;
  rep.partition = p;
  rep.n = p.n();
  rep.rank_of_g = classical_rank(kind, p.n());
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);

  Weights w;
  if (kind == AlgebraKind::GeneralLinear) {
    w = opt.weights ? *opt.weights : default_gl_weights(p);
    if (const auto v = gl_weights_violation(w, p); !v.empty()) throw WeightError(v);
  } else if (kind == AlgebraKind::Symplectic) {
    w = opt.weights ? *opt.weights : default_sp_weights(model);
    if (const auto v = sp_weights_violation(w, model); !v.empty()) throw WeightError(v);
  } else if (opt.weights) {
    throw WeightError("weights apply to gl and sp only");
  }

  std::optional<SigmaSplit> split;
  GlCentralizer gl = kind == AlgebraKind::GeneralLinear ? make_gl_centralizer(p) : (split.emplace(sigma_split(model)), split->gl);
  const AlgebraPtr z = split ? split->z : gl.algebra;
  rep.dim_z = z->dim();

  const auto t0 = std::chrono::steady_clock::now();
  const IndexCertificate cert = index_certificate(*z);
  rep.index_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.index_z = cert.index;

  Battery bat;
  common_checks(bat, model, gl, z, cert, opt, rng);
  switch (kind) {
    case AlgebraKind::GeneralLinear:
      gl_checks(bat, gl, w, rep, rng);
      break;
    case AlgebraKind::Symplectic:
      form_checks(bat, model, *split, cert, sp_stab_dim);
      sp_checks(bat, model, *split, w, rep, rng);
      break;
    case AlgebraKind::Orthogonal:
      form_checks(bat, model, *split, cert, so_stab_dim);
      so_checks(bat, model, *split, rep);
      if (p == Partition({5, 3})) {
        rep.so8_facts = so8_counterexample(opt.samples, opt.seed);
        bat.run("so8_subregular_facts", [&]() -> Outcome {
          return {rep.so8_facts->all_pass(), std::to_string(rep.so8_facts->facts.size()) + " facts"};
        });
      }
      break;
  }
  std::string context = to_string(kind);
  if (rep.so_case) context += " (" + *rep.so_case + ")";
  rep.checks = bat.finish(context);
  rep.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::uint64_t derive_seed(std::uint64_t base, AlgebraKind kind, const Partition& p) {
  // FNV-1a over "kind:partition", then mixed with the base seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (const char ch : to_string(kind) + ":" + p.to_string()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::uint64_t x = h ^ (base + 0x9e3779b97f4a7c15ULL);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Partition> sweep_partitions(AlgebraKind kind, int max_n) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& p : partitions_of(n))
      if (admissible(p, kind)) out.push_back(std::move(p));
  return out;
}

std::vector<VerifyReport> sweep(AlgebraKind kind, int max_n, const VerifyOptions& options, unsigned jobs) {
  const std::vector<Partition> parts = sweep_partitions(kind, max_n);
  std::vector<std::optional<VerifyReport>> slots(parts.size());
  std::vector<std::exception_ptr> errors(parts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < parts.size(); i = next++) {
      try {
        VerifyOptions o = options;
        o.seed = derive_seed(options.seed, kind, parts[i]);
        slots[i] = verify(kind, parts[i], o);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(parts.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<VerifyReport> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace nilcent
