#pragma once

// Distinguished covectors on z_gl(e) for each classical type, the case
// split for so_n, and the involution splittings used with restricted forms.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcent/centralizer.hpp"
#include "nilcent/indexcalc.hpp"

namespace nilcent {

class WeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CaseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a[i] for stored block i.
struct Weights {
  std::vector<Scalar> a;
};

Weights default_gl_weights(const Partition& p);
/// +(i+1) on the first member of each pair and on self-paired blocks, -(i+1)
/// on the second member.
Weights default_sp_weights(const Model& m);
/// Empty when valid.
std::string gl_weights_violation(const Weights& w, const Partition& p);
std::string sp_weights_violation(const Weights& w, const Model& m);

/// Ambient covectors are coordinate vectors over the xi-basis of z_gl(e).

/// alpha(xi_i^{j,s}) = a_i when i = j and s = d_i, else 0. Throws WeightError.
Vec alpha_gl(const GlCentralizer& gl, const Weights& w);
Vec alpha_sp(const Model& m, const GlCentralizer& gl, const Weights& w);

/// Dual functional phi -> c_i^{j,s}(phi).
Vec coefficient_functional(const GlCentralizer& gl, const BasisElt& x);

enum class SoCaseKind { RegularOdd, TwoEvenBlocks, Case1, Case2, Case3 };

struct SoCase {
  SoCaseKind kind;
  std::size_t prefix = 0;  // Case1: the 2p leading blocks with nondegenerate restriction
};

std::string to_string(SoCaseKind kind);

/// Screens the two special cases, then returns the unique applicable case;
/// std::logic_error if none applies.
SoCase classify_so(const Model& m);
/// Even prefixes 2p < k closed under block pairing, ascending; empty for the
/// two screened shapes. Case1 uses the first.
std::vector<std::size_t> case1_prefixes(const Model& m);
/// Every case whose predicate holds (after the screen), for exclusivity checks.
std::vector<SoCase> applicable_so_cases(const Model& m);

/// The relabelling of case (3): stored block 0 is labelled 0, and the two
/// members of each pair get +l and -l so that i (w_i, e^{d_i} w_{-i}) = |i|.
/// Throws CaseMismatch if the partition is not of case (3) shape.
std::vector<int> case3_labels(const Model& m);
/// Empty when i (w_i, e^{d_i} w_{-i}) = |i| holds for every label.
std::string case3_normalisation_violation(const Model& m, const std::vector<int>& labels);

/// beta_i = c_i^{i,d_i-1} (i = i*), gamma_{i,j} - gamma_{j,i} (i = i*, j = j*),
/// gamma_{t,t} + gamma_{t*,t*} (t != t*), with gamma_{i,j} = c_i^{j,d_j}.
/// Throws std::invalid_argument when the index constraints fail.
Vec beta_functional(const Model& m, const GlCentralizer& gl, int i);
Vec gamma_difference(const Model& m, const GlCentralizer& gl, int i, int j);
Vec gamma_sum(const Model& m, const GlCentralizer& gl, int t);

enum class PairOrder { Consecutive, Nested };

/// Case-specific ambient covector. RegularOdd gets the zero covector (z(e)
/// is abelian). `order` only matters for Case1, which accepts any prefix
/// from case1_prefixes. Throws CaseMismatch when `c` is not the case of the
/// model.
Vec so_covector(const Model& m, const GlCentralizer& gl, const SoCase& c, PairOrder order = PairOrder::Consecutive);

/// The involution tau = conjugation by +1 on the blocks in `first` and -1 on
/// the rest; returns (h0, h1) = (tau-even, tau-odd) parts of the subspace
/// `ambient` of z_gl(e), as subspaces of `target` coordinates via `to_target`.
struct TauSplit {
  Subalgebra h0;
  Subalgebra h1;
};
TauSplit tau_split_gl(const GlCentralizer& gl, const std::vector<bool>& first);
TauSplit tau_split_z(const SigmaSplit& split, const std::vector<bool>& first);

struct StepBound {
  int q = 0;  // Phi_{-q}
  std::size_t dim = 0;
  Scalar bound = 0;
};

struct StepFiltration {
  std::map<int, std::size_t> dims;  // step l -> dim Phi_l
  std::size_t stabiliser_dim = 0;
  bool graded = false;              // stabiliser = direct sum of its Phi_l
  bool positive_steps_vanish = false;
  std::vector<StepBound> bounds;    // q = 0 first
  bool bounds_hold = false;
};

/// Case (3) only. Stabiliser of the case covector in z(e) split by step.
StepFiltration step_filtration_bounds(const Model& m, const SigmaSplit& split);

}  // namespace nilcent
