#pragma once

// Matrix model of a nilpotent element in gl_n, sp_2n or so_n: the Jordan
// basis e^s w_i, the nilpotent matrix e and the invariant form J.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilcent/exactlin.hpp"

namespace nilcent {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InadmissibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class AlgebraKind { GeneralLinear, Symplectic, Orthogonal };

std::string to_string(AlgebraKind kind);
/// Accepts "gl", "sp", "so" (and the long enum names).
AlgebraKind parse_kind(std::string_view text);

/// Jordan type of a nilpotent element. Block sizes are stored weakly
/// decreasing; block i spans e^s w_i for 0 <= s <= d(i) = size(i) - 1.
class Partition {
 public:
  /// Sorts the sizes into weakly decreasing order. Rejects empty input and
  /// nonpositive sizes.
  explicit Partition(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int n() const { return n_; }
  std::size_t k() const { return sizes_.size(); }
  int size(std::size_t i) const { return sizes_.at(i); }
  int d(std::size_t i) const { return sizes_.at(i) - 1; }
  /// Index of e^s w_i in the basis of V.
  std::size_t position(std::size_t i, int s) const { return offsets_.at(i) + static_cast<std::size_t>(s); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }

  /// "5,3,3,1"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  int n_ = 0;
};

/// Comma-separated positive integers, e.g. "5,3,3,1".
Partition parse_partition(std::string_view text);

/// All partitions of n in lexicographically descending order.
std::vector<Partition> partitions_of(int n);

bool admissible(const Partition& p, AlgebraKind kind);
/// Empty when admissible, otherwise a message naming the violated parity rule.
std::string admissibility_violation(const Partition& p, AlgebraKind kind);

/// Rank of gl_n, sp_n (n = dim V) or so_n.
int classical_rank(AlgebraKind kind, int n);

/// partner[i] == i for self-paired blocks. scale[i] is the value
/// (w_i, e^{d_i} w_partner(i)); the full form is
/// (e^a w_i, e^b w_partner(i)) = (-1)^a scale[i] when a + b = d_i.
struct BlockPairing {
  std::vector<std::size_t> partner;
  std::vector<Scalar> scale;

  bool self_paired(std::size_t i) const { return partner.at(i) == i; }
  Scalar form_value(std::size_t i, int a, int b, int d) const;
};

/// Two admissible choices of J per partition. Downstream dimensions must not
/// depend on the choice.
enum class FormVariant { Standard, Alternate };

struct Model {
  AlgebraKind kind;
  Partition partition;
  QMat e;
  std::optional<QMat> form;
  std::optional<QMat> form_inverse;
  std::vector<std::string> basis_labels;  // "e^s w_i", 1-based blocks
  std::vector<std::size_t> generators;    // column of w_i
  BlockPairing pairing;
};

/// Block-diagonal nilpotent in the basis e^s w_i (e sends e^s w_i to e^{s+1} w_i).
QMat build_nilpotent(const Partition& p);

/// Throws InadmissibleError.
Model build_model(const Partition& p, AlgebraKind kind, FormVariant variant = FormVariant::Standard);

/// Verifies nilpotency, Jordan type, symmetry class of J, e^T J + J e = 0,
/// nondegeneracy and the orthogonal normalisations. Returns an empty string
/// when everything holds, otherwise the first failed property.
std::string model_violation(const Model& m);

/// sigma(x) = -J x^T J^{-1}; the identity map is not defined for gl.
QMat sigma(const Model& m, const QMat& x);

}  // namespace nilcent
