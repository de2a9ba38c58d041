#pragma once

// The bracket criterion [h, g] ∩ h = 0 for generic stabilisers, the
// decomposition z(e) = h ⊕ m for gl, the torus t and its centraliser, and the
// so_8 counterexample with partition [5,3].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcent/centralizer.hpp"
#include "nilcent/covectors.hpp"
#include "nilcent/indexcalc.hpp"

namespace nilcent {

struct GenStabReport {
  std::string algebra;
  std::size_t dim_g = 0;
  std::size_t dim_h = 0;
  std::size_t intersection_dim = 0;
  bool criterion_holds = false;
  std::optional<Vec> witness;  // nonzero element of [h, g] ∩ h
};

/// Throws std::invalid_argument if h is not bracket-closed.
GenStabReport is_generic_stabilizer(const Subalgebra& h);

/// Span of [h_a, g_b] over basis pairs; used to validate witnesses.
Subalgebra bracket_with_algebra(const Subalgebra& h);

struct HmDecomposition {
  GlCentralizer gl;
  Subalgebra h;  // xi_i^{i,s}
  Subalgebra m;  // xi_i^{j,s}, i != j
  bool direct_sum = false;
  bool m_invariant = false;  // [h, m] ⊆ m
};

HmDecomposition hm_decomposition(const Partition& p);

struct TorusReport {
  std::size_t dim_t = 0;
  std::size_t dim_h = 0;
  std::size_t dim_centralizer = 0;
  std::size_t dim_normalizer = 0;
  bool t_in_h = false;
  bool centralizer_is_h = false;
  bool normalizer_is_h = false;
  /// [t_i xi_i^{i,0} + t_j xi_j^{j,0}, xi_i^{j,s}] = (t_j - t_i) xi_i^{j,s}
  /// for every off-diagonal generator.
  bool weights_ok = false;
};

TorusReport torus_and_normalizer(const Partition& p);

struct FactCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SampleStats {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t draws = 0;  // including non-regular draws that were resampled
  std::size_t criterion_passes = 0;
};

struct CounterexampleReport {
  std::string algebra;
  std::vector<FactCheck> facts;
  SampleStats sampling;
  bool experimental = false;

  bool all_pass() const;
};

/// so_8, partition [5,3]. Labels in the facts follow the convention where
/// block 1 has size 3 and block 2 has size 5, so that
/// (w_1, e^2 w_1) = (w_2, e^4 w_2) = 1.
CounterexampleReport so8_counterexample(std::size_t samples = 100, std::uint64_t seed = 1);

/// so_9, partition [5,3,1]: index and sampled criterion statistics only.
CounterexampleReport so9_extension(std::size_t samples = 100, std::uint64_t seed = 1);

/// Draws regular covectors on g (stabiliser dimension = ind g) and counts how
/// many stabilisers satisfy the criterion.
SampleStats sample_criterion(const AlgebraPtr& g, std::size_t index_g, std::size_t samples, std::uint64_t seed);

}  // namespace nilcent
