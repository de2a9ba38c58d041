#include "nilcent/covectors.hpp"

#include <algorithm>
#include <set>

namespace nilcent {

Weights default_gl_weights(const Partition& p) {
  Weights w;
  for (std::size_t i = 0; i < p.k(); ++i) w.a.emplace_back(static_cast<long>(i + 1));
  return w;
}

Weights default_sp_weights(const Model& m) {
  Weights w;
  const auto& partner = m.pairing.partner;
  w.a.assign(partner.size(), Scalar(0));
  for (std::size_t i = 0; i < partner.size(); ++i) {
    if (partner[i] < i) continue;
    w.a[i] = static_cast<long>(i + 1);
    if (partner[i] != i) w.a[partner[i]] = -static_cast<long>(i + 1);
  }
  return w;
}

std::string gl_weights_violation(const Weights& w, const Partition& p) {
  if (w.a.size() != p.k())
    return "expected " + std::to_string(p.k()) + " weights, got " + std::to_string(w.a.size());
  std::set<Scalar> seen;
  for (const auto& a : w.a) {
    if (sgn(a) == 0) return "weights must be nonzero";
    if (!seen.insert(a).second) return "weights must be pairwise distinct, " + a.get_str() + " repeats";
  }
  return {};
}

std::string sp_weights_violation(const Weights& w, const Model& m) {
  if (auto why = gl_weights_violation(w, m.partition); !why.empty()) return why;
  for (std::size_t i = 0; i < w.a.size(); ++i) {
    const std::size_t q = m.pairing.partner[i];
    if (q != i && w.a[q] != -w.a[i])
      return "paired blocks " + std::to_string(i + 1) + " and " + std::to_string(q + 1) + " need opposite weights";
  }
  return {};
}

Vec coefficient_functional(const GlCentralizer& gl, const BasisElt& x) {
  Vec out(gl.basis.size());
  out.at(gl.position.at(x)) = 1;
  return out;
}

namespace {

Vec top_diagonal(const GlCentralizer& gl, const Weights& w) {
  Vec out(gl.basis.size());
  const Partition& p = gl.partition;
  for (std::size_t i = 0; i < p.k(); ++i) {
    const int b = static_cast<int>(i);
    out[gl.position.at({b, b, p.d(i)})] = w.a[i];
  }
  return out;
}

void add_functional(Vec& acc, const GlCentralizer& gl, const BasisElt& x, const Scalar& c) {
  acc.at(gl.position.at(x)) += c;
}

int d_of(const Model& m, int i) { return m.partition.d(static_cast<std::size_t>(i)); }
bool self_paired(const Model& m, int i) { return m.pairing.self_paired(static_cast<std::size_t>(i)); }

}  // namespace

Vec alpha_gl(const GlCentralizer& gl, const Weights& w) {
  if (auto why = gl_weights_violation(w, gl.partition); !why.empty()) throw WeightError(why);
  return top_diagonal(gl, w);
}

Vec alpha_sp(const Model& m, const GlCentralizer& gl, const Weights& w) {
  if (m.kind != AlgebraKind::Symplectic) throw std::invalid_argument("alpha_sp: model is not symplectic");
  if (auto why = sp_weights_violation(w, m); !why.empty()) throw WeightError(why);
  return top_diagonal(gl, w);
}

std::string to_string(SoCaseKind kind) {
  switch (kind) {
    case SoCaseKind::RegularOdd: return "RegularOdd";
    case SoCaseKind::TwoEvenBlocks: return "TwoEvenBlocks";
    case SoCaseKind::Case1: return "Case1";
    case SoCaseKind::Case2: return "Case2";
    case SoCaseKind::Case3: return "Case3";
  }
  return "?";
}

std::vector<std::size_t> case1_prefixes(const Model& m) {
  const std::size_t k = m.partition.k();
  std::vector<std::size_t> out;
  if (k == 2 && m.partition.size(0) % 2 == 0 && m.partition.size(1) % 2 == 0) return out;
  for (std::size_t prefix = 2; prefix < k; prefix += 2) {
    bool closed = true;
    for (std::size_t i = 0; i < prefix; ++i) closed = closed && m.pairing.partner[i] < prefix;
    if (closed) out.push_back(prefix);
  }
  return out;
}

std::vector<SoCase> applicable_so_cases(const Model& m) {
  if (m.kind != AlgebraKind::Orthogonal) throw std::invalid_argument("classify_so: model is not orthogonal");
  const Partition& p = m.partition;
  const std::size_t k = p.k();
  if (k == 1) return {{SoCaseKind::RegularOdd}};
  if (k == 2 && p.size(0) % 2 == 0 && p.size(1) % 2 == 0) return {{SoCaseKind::TwoEvenBlocks}};
  std::vector<SoCase> out;
  if (const auto prefixes = case1_prefixes(m); !prefixes.empty()) out.push_back({SoCaseKind::Case1, prefixes.front()});
  auto even = [&](std::size_t i) { return p.d(i) % 2 == 0; };
  bool case2 = even(0) && even(k - 1);
  for (std::size_t i = 1; i + 1 < k; ++i) case2 = case2 && !even(i);
  if (case2) out.push_back({SoCaseKind::Case2});
  bool case3 = true;
  for (std::size_t i = 0; i < k; ++i) case3 = case3 && (even(i) == (i == 0));
  if (case3) out.push_back({SoCaseKind::Case3});
  return out;
}

SoCase classify_so(const Model& m) {
  const auto cases = applicable_so_cases(m);
  if (cases.size() != 1)
    throw std::logic_error("classify_so: " + std::to_string(cases.size()) + " cases apply to [" +
                           m.partition.to_string() + "]");
  return cases.front();
}

std::vector<int> case3_labels(const Model& m) {
  if (classify_so(m).kind != SoCaseKind::Case3) throw CaseMismatch("case3_labels: partition is not of case (3)");
  const std::size_t k = m.partition.k();
  std::vector<int> labels(k, 0);
  int next = 1;
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t q = m.pairing.partner[i];
    if (q < i) continue;
    const bool i_positive = m.pairing.scale[i] == 1;
    labels[i] = i_positive ? next : -next;
    labels[q] = i_positive ? -next : next;
    ++next;
  }
  return labels;
}

std::string case3_normalisation_violation(const Model& m, const std::vector<int>& labels) {
  const Partition& p = m.partition;
  const std::size_t k = p.k();
  if (labels.size() != k) return "label count differs from block count";
  std::vector<std::size_t> by_label(k);
  const int half = static_cast<int>(k / 2);
  std::vector<bool> seen(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const int l = labels[i];
    if (l < -half || l > half || seen[static_cast<std::size_t>(l + half)]) return "labels are not a bijection onto -m..m";
    seen[static_cast<std::size_t>(l + half)] = true;
    by_label[static_cast<std::size_t>(l + half)] = i;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const int l = labels[i];
    const std::size_t opposite = by_label[static_cast<std::size_t>(-l + half)];
    if (m.pairing.partner[i] != opposite) return "block labelled " + std::to_string(l) + " is not paired with -" + std::to_string(l);
    const Scalar v = (*m.form)(p.position(i, 0), p.position(opposite, p.d(i)));
    if (Scalar(l) * v != std::abs(l)) return "normalisation fails for label " + std::to_string(l);
    for (std::size_t j = 0; j < k; ++j)
      if (std::abs(labels[i]) <= std::abs(labels[j]) && p.d(i) < p.d(j))
        return "d is not monotone in |label|";
  }
  return {};
}

Vec beta_functional(const Model& m, const GlCentralizer& gl, int i) {
  if (!self_paired(m, i)) throw std::invalid_argument("beta_i needs i = i*");
  if (d_of(m, i) < 1) throw std::invalid_argument("beta_i needs d_i >= 1");
  return coefficient_functional(gl, {i, i, d_of(m, i) - 1});
}

Vec gamma_difference(const Model& m, const GlCentralizer& gl, int i, int j) {
  if (i == j || !self_paired(m, i) || !self_paired(m, j))
    throw std::invalid_argument("gamma_{i,j} - gamma_{j,i} needs i = i*, j = j*, i != j");
  Vec out = coefficient_functional(gl, {i, j, d_of(m, j)});
  add_functional(out, gl, {j, i, d_of(m, i)}, -1);
  return out;
}

Vec gamma_sum(const Model& m, const GlCentralizer& gl, int t) {
  if (self_paired(m, t)) throw std::invalid_argument("gamma_{t,t} + gamma_{t*,t*} needs t != t*");
  const int ts = static_cast<int>(m.pairing.partner[static_cast<std::size_t>(t)]);
  Vec out = coefficient_functional(gl, {t, t, d_of(m, t)});
  add_functional(out, gl, {ts, ts, d_of(m, ts)}, 1);
  return out;
}

Vec so_covector(const Model& m, const GlCentralizer& gl, const SoCase& c, PairOrder order) {
  const SoCase actual = classify_so(m);
  const auto prefixes = case1_prefixes(m);
  const bool prefix_ok = c.kind != SoCaseKind::Case1 || std::find(prefixes.begin(), prefixes.end(), c.prefix) != prefixes.end();
  if (actual.kind != c.kind || !prefix_ok)
    throw CaseMismatch("so_covector: [" + m.partition.to_string() + "] is " + to_string(actual.kind) + ", not " +
                       to_string(c.kind));
  const Partition& p = m.partition;
  const int k = static_cast<int>(p.k());
  Vec out(gl.basis.size());
  switch (c.kind) {
    case SoCaseKind::RegularOdd:
      break;
    case SoCaseKind::TwoEvenBlocks: {
      const int top = p.d(0) - 1;  // 2d - 2 for blocks of size 2d
      add_functional(out, gl, {0, 0, top}, 1);
      add_functional(out, gl, {1, 1, top}, -1);
      break;
    }
    case SoCaseKind::Case1: {
      const int prefix = static_cast<int>(c.prefix);
      std::vector<int> odd;
      for (int i = 0; i < prefix; ++i) {
        if (p.size(static_cast<std::size_t>(i)) % 2 == 1)
          odd.push_back(i);
        else
          add_functional(out, gl, {i, i, d_of(m, i)}, 1);
      }
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t a = 0; a < odd.size() / 2; ++a)
        pairs.emplace_back(order == PairOrder::Consecutive ? std::pair{odd[2 * a], odd[2 * a + 1]}
                                                           : std::pair{odd[a], odd[odd.size() - 1 - a]});
      for (const auto& [i, j] : pairs) {
        add_functional(out, gl, {i, j, d_of(m, j)}, 1);
        add_functional(out, gl, {j, i, d_of(m, i)}, -1);
      }
      break;
    }
    case SoCaseKind::Case2: {
      if (p.d(0) >= 1) add_functional(out, gl, {0, 0, p.d(0) - 1}, 1);
      for (int i = 1; i + 1 < k; ++i) add_functional(out, gl, {i, i, d_of(m, i)}, 1);
      break;
    }
    case SoCaseKind::Case3: {
      const auto labels = case3_labels(m);
      const int half = k / 2;
      std::vector<int> block(static_cast<std::size_t>(2 * half + 1));
      for (int i = 0; i < k; ++i) block[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] + half)] = i;
      auto at = [&](int label) { return block[static_cast<std::size_t>(label + half)]; };
      for (int l = -half + 1; l <= half; ++l) add_functional(out, gl, {at(l - 1), at(l), d_of(m, at(l))}, 1);
      break;
    }
  }
  return out;
}

namespace {

std::pair<std::vector<Vec>, std::vector<Vec>> tau_units(const GlCentralizer& gl, const std::vector<bool>& first) {
  if (first.size() != gl.partition.k()) throw DimensionError("tau split: one flag per block expected");
  std::vector<Vec> same, cross;
  for (std::size_t k = 0; k < gl.basis.size(); ++k) {
    Vec unit(gl.basis.size());
    unit[k] = 1;
    const auto& x = gl.basis[k];
    (first[static_cast<std::size_t>(x.i)] == first[static_cast<std::size_t>(x.j)] ? same : cross)
        .push_back(std::move(unit));
  }
  return {std::move(same), std::move(cross)};
}

}  // namespace

TauSplit tau_split_gl(const GlCentralizer& gl, const std::vector<bool>& first) {
  auto [same, cross] = tau_units(gl, first);
  return {Subalgebra(gl.algebra, same), Subalgebra(gl.algebra, cross)};
}

TauSplit tau_split_z(const SigmaSplit& split, const std::vector<bool>& first) {
  auto [same, cross] = tau_units(split.gl, first);
  auto into_z = [&](const std::vector<Vec>& units) {
    const Subalgebra part = intersect(split.z_in_gl, Subalgebra(split.gl.algebra, units));
    std::vector<Vec> rows;
    for (const auto& v : part.elements()) rows.push_back(split.to_z(v));
    return Subalgebra(split.z, rows);
  };
  return {into_z(same), into_z(cross)};
}

StepFiltration step_filtration_bounds(const Model& m, const SigmaSplit& split) {
  const SoCase c = classify_so(m);
  if (c.kind != SoCaseKind::Case3) throw CaseMismatch("step_filtration_bounds: partition is not of case (3)");
  const auto labels = case3_labels(m);
  const Partition& p = m.partition;
  const int half = static_cast<int>(p.k() / 2);
  const Vec alpha = so_covector(m, split.gl, c);
  const Subalgebra stab = stabilizer(split.z, restrict_covector(alpha, split.z_in_gl));

  std::vector<Vec> stab_gl;
  for (const auto& v : stab.elements()) stab_gl.push_back(split.to_gl(v));
  const Subalgebra s(split.gl.algebra, stab_gl);

  StepFiltration out;
  out.stabiliser_dim = stab.dim();
  std::size_t total = 0;
  for (int l = -2 * half; l <= 2 * half; ++l) {
    std::vector<Vec> units;
    for (std::size_t k = 0; k < split.gl.basis.size(); ++k) {
      const auto& x = split.gl.basis[k];
      if (labels[static_cast<std::size_t>(x.j)] - labels[static_cast<std::size_t>(x.i)] != l) continue;
      Vec unit(split.gl.basis.size());
      unit[k] = 1;
      units.push_back(std::move(unit));
    }
    const std::size_t d = units.empty() ? 0 : intersect(s, Subalgebra(split.gl.algebra, units)).dim();
    out.dims[l] = d;
    total += d;
  }
  out.graded = total == stab.dim();
  out.positive_steps_vanish = true;
  for (const auto& [l, d] : out.dims)
    if (l > 0 && d != 0) out.positive_steps_vanish = false;

  std::vector<int> d_by_label(static_cast<std::size_t>(half + 1));
  for (std::size_t i = 0; i < p.k(); ++i)
    if (labels[i] >= 0) d_by_label[static_cast<std::size_t>(labels[i])] = p.d(i);
  out.bounds_hold = true;
  for (int q = 0; q <= 2 * half; ++q) {
    const int l = (q + 1) / 2;  // q = 2l or 2l - 1
    const Scalar bound = q == 0 ? Scalar(d_by_label[0]) / 2 : Scalar(d_by_label[static_cast<std::size_t>(l)] + 1) / 2;
    const std::size_t d = out.dims[-q];
    out.bounds.push_back({q, d, bound});
    if (Scalar(static_cast<long>(d)) > bound) out.bounds_hold = false;
  }
  return out;
}

}  // namespace nilcent
