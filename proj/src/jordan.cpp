#include "nilcent/jordan.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace nilcent {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::GeneralLinear: return "gl";
    case AlgebraKind::Symplectic: return "sp";
    case AlgebraKind::Orthogonal: return "so";
  }
  return "?";
}

AlgebraKind parse_kind(std::string_view text) {
  if (text == "gl" || text == "GeneralLinear") return AlgebraKind::GeneralLinear;
  if (text == "sp" || text == "Symplectic") return AlgebraKind::Symplectic;
  if (text == "so" || text == "Orthogonal") return AlgebraKind::Orthogonal;
  throw ParseError("unknown algebra kind '" + std::string(text) + "' (expected gl, sp or so)");
}

Partition::Partition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ParseError("empty partition");
  for (int s : sizes_)
    if (s < 1) throw ParseError("block sizes must be positive, got " + std::to_string(s));
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
  offsets_.reserve(sizes_.size());
  for (int s : sizes_) {
    offsets_.push_back(static_cast<std::size_t>(n_));
    n_ += s;
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size())
      throw ParseError("cannot parse partition '" + std::string(text) + "': bad field '" + std::string(field) + "'");
    sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(sizes));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string admissibility_violation(const Partition& p, AlgebraKind kind) {
  if (kind == AlgebraKind::GeneralLinear) return {};
  if (kind == AlgebraKind::Symplectic && p.n() % 2 != 0)
    return "symplectic form needs even n, got n = " + std::to_string(p.n());
  std::map<int, int> multiplicity;
  for (int s : p.sizes()) ++multiplicity[s];
  const int unpaired_parity = kind == AlgebraKind::Symplectic ? 1 : 0;
  for (const auto& [size, count] : multiplicity)
    if (size % 2 == unpaired_parity && count % 2 != 0)
      return std::string(kind == AlgebraKind::Symplectic ? "odd" : "even") + " part " + std::to_string(size) +
             " occurs " + std::to_string(count) + " time(s); " +
             (kind == AlgebraKind::Symplectic ? "symplectic" : "orthogonal") + " pairing needs " +
             (kind == AlgebraKind::Symplectic ? "odd" : "even") + " parts with even multiplicity";
  return {};
}

bool admissible(const Partition& p, AlgebraKind kind) { return admissibility_violation(p, kind).empty(); }

int classical_rank(AlgebraKind kind, int n) { return kind == AlgebraKind::GeneralLinear ? n : n / 2; }

Scalar BlockPairing::form_value(std::size_t i, int a, int b, int d) const {
  if (a + b != d) return 0;
  return a % 2 == 0 ? scale.at(i) : Scalar(-scale.at(i));
}

QMat build_nilpotent(const Partition& p) {
  QMat e(static_cast<std::size_t>(p.n()), static_cast<std::size_t>(p.n()));
  for (std::size_t i = 0; i < p.k(); ++i)
    for (int s = 0; s < p.d(i); ++s) e(p.position(i, s + 1), p.position(i, s)) = 1;
  return e;
}

namespace {

std::string vector_label(std::size_t block, int s) {
  const std::string w = "w_" + std::to_string(block + 1);
  if (s == 0) return w;
  if (s == 1) return "e " + w;
  return "e^" + std::to_string(s) + " " + w;
}

// Parity of dimension that must be paired: odd blocks for sp, even for so.
bool needs_partner(AlgebraKind kind, int size) {
  if (kind == AlgebraKind::Symplectic) return size % 2 == 1;
  if (kind == AlgebraKind::Orthogonal) return size % 2 == 0;
  return false;
}

}  // namespace

Model build_model(const Partition& p, AlgebraKind kind, FormVariant variant) {
  if (auto why = admissibility_violation(p, kind); !why.empty()) throw InadmissibleError(why);
  Model m{kind, p, build_nilpotent(p), std::nullopt, std::nullopt, {}, {}, {}};
  for (std::size_t i = 0; i < p.k(); ++i) {
    m.generators.push_back(p.position(i, 0));
    for (int s = 0; s <= p.d(i); ++s) m.basis_labels.push_back(vector_label(i, s));
  }

  const std::size_t k = p.k();
  m.pairing.partner.assign(k, k);
  m.pairing.scale.assign(k, Scalar(1));
  if (kind == AlgebraKind::GeneralLinear) {
    for (std::size_t i = 0; i < k; ++i) m.pairing.partner[i] = i;
    return m;
  }

  const int eps = kind == AlgebraKind::Orthogonal ? 1 : -1;
  const Scalar first = variant == FormVariant::Standard ? 1 : -1;
  for (std::size_t i = 0; i < k; ++i) {
    if (m.pairing.partner[i] != k) continue;
    if (!needs_partner(kind, p.size(i))) {
      m.pairing.partner[i] = i;
      // Orthogonal self-paired blocks are normalised to (w_i, e^{d_i} w_i) = 1.
      m.pairing.scale[i] = kind == AlgebraKind::Orthogonal ? Scalar(1) : first;
      continue;
    }
    std::size_t j = i + 1;
    while (j < k && !(m.pairing.partner[j] == k && p.size(j) == p.size(i))) ++j;
    if (j == k) throw InadmissibleError("no partner for block " + std::to_string(i + 1));
    m.pairing.partner[i] = j;
    m.pairing.partner[j] = i;
    m.pairing.scale[i] = first;
    // Symmetry class forces c_j = eps (-1)^d c_i.
    m.pairing.scale[j] = (p.d(i) % 2 == 0 ? eps : -eps) * first;
  }

  const auto n = static_cast<std::size_t>(p.n());
  QMat form(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t q = m.pairing.partner[i];
    const int d = p.d(i);
    for (int a = 0; a <= d; ++a) form(p.position(i, a), p.position(q, d - a)) = m.pairing.form_value(i, a, d - a, d);
  }
  m.form_inverse = inverse(form);
  m.form = std::move(form);
  return m;
}

std::string model_violation(const Model& m) {
  const Partition& p = m.partition;
  const auto n = static_cast<std::size_t>(p.n());
  if (m.e.rows() != n || m.e.cols() != n) return "e has the wrong shape";
  QMat power = identity(n);
  for (int s = 0; s <= p.size(0); ++s) {
    std::size_t expected = 0;
    for (int size : p.sizes()) expected += static_cast<std::size_t>(std::max(0, size - s));
    if (rank(power) != expected) return "rank(e^" + std::to_string(s) + ") does not match the Jordan type";
    power = power * m.e;
  }
  const std::size_t k = p.k();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t q = m.pairing.partner.at(i);
    if (q >= k || m.pairing.partner.at(q) != i) return "pairing is not an involution";
    if (p.size(q) != p.size(i)) return "paired blocks have different sizes";
  }
  if (m.kind == AlgebraKind::GeneralLinear) return m.form ? "gl model carries a form" : "";
  if (!m.form) return "form missing";
  const QMat& J = *m.form;
  const QMat Jt = transpose(J);
  if (m.kind == AlgebraKind::Orthogonal && !(Jt == J)) return "form is not symmetric";
  if (m.kind == AlgebraKind::Symplectic && !(Jt == Scalar(-1) * J)) return "form is not skew-symmetric";
  if (!is_zero(transpose(m.e) * J + J * m.e)) return "e does not preserve the form";
  if (rank(J) != n) return "form is degenerate";
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t q = m.pairing.partner[i];
    if (needs_partner(m.kind, p.size(i)) == (q == i)) return "pairing violates the parity convention";
    if (m.kind != AlgebraKind::Orthogonal) continue;
    // (w_{i*}, e^{d_i} w_i) = ±1, and = 1 on self-paired blocks.
    const Scalar v = J(p.position(q, 0), p.position(i, p.d(i)));
    if (q == i ? v != 1 : abs(v) != 1) return "orthogonal normalisation fails on block " + std::to_string(i + 1);
  }
  return {};
}

QMat sigma(const Model& m, const QMat& x) {
  if (!m.form) throw std::invalid_argument("sigma: gl model has no form");
  return Scalar(-1) * (*m.form * transpose(x) * *m.form_inverse);
}

}  // namespace nilcent
