#pragma once

// Index of a Lie algebra through the generic rank of its Kirillov matrix,
// stabilisers of covectors, and kernels of restricted skew forms.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "nilcent/centralizer.hpp"
#include "nilcent/exactlin.hpp"

namespace nilcent {

struct Covector {
  AlgebraPtr algebra;
  Vec coords;

  Scalar operator()(const Vec& x) const { return dot(coords, x); }
};

/// Values of alpha on the rows of s, i.e. the restriction to s in its row basis.
Vec restrict_covector(const Vec& alpha, const Subalgebra& s);

/// B_uv = sum_w c_uv^w x_w, one indeterminate per dual basis vector.
PolyMat kirillov_matrix(const LieAlgebra& g);
/// B(alpha)
QMat kirillov_at(const LieAlgebra& g, const Vec& alpha);

/// Dual coordinates W such that the affine slice S = {x : x_w = 0 for w not
/// in W} meets a dense set of coadjoint orbits. The certificate is the
/// witness point s in S where the rows of B(s) together with the unit
/// vectors e_w (w in W) span the whole dual space: the orbit map
/// G x S -> g* is then a submersion at (1, s), hence dominant, and because
/// rank B is constant on orbits the generic rank of B equals that of B|_S.
struct TransversalSlice {
  std::vector<std::size_t> coords;
  Vec witness;
};

TransversalSlice transversal_slice(const LieAlgebra& g, std::uint64_t seed = 0x51ce);

/// Rechecks the certificate of a slice exactly.
bool slice_is_transversal(const LieAlgebra& g, const TransversalSlice& slice);

/// Kirillov matrix restricted to the slice, in |coords| indeterminates.
PolyMat restricted_kirillov(const LieAlgebra& g, const std::vector<std::size_t>& coords);

struct IndexCertificate {
  std::size_t index = 0;
  std::size_t generic_rank = 0;
  TransversalSlice slice;
};

/// dim g - generic rank of B, with the symbolic elimination run on a
/// certified transversal slice.
IndexCertificate index_certificate(const LieAlgebra& g);
std::size_t index(const LieAlgebra& g);

/// dim g - generic_rank of the full Kirillov matrix; only feasible for small
/// algebras, kept as an independent cross-check of the slice reduction.
std::size_t index_unreduced(const LieAlgebra& g);

/// dim g - max rank of B over `samples` random integer covectors.
std::size_t sampled_index(const LieAlgebra& g, std::size_t samples, std::mt19937_64& rng, long bound = 10000);

/// {x : alpha([x, g]) = 0}. The closure check always runs and throws
/// std::logic_error on failure.
Subalgebra stabilizer(const AlgebraPtr& g, const Vec& alpha);

/// dim Ker of (x, y) -> gamma([x, y]) on h1, for h0 ⊕ h1 with
/// [h0, h1] ⊆ h1 and [h1, h1] ⊆ h0. Throws std::invalid_argument if the
/// decomposition is not compatible or gamma does not vanish on h1.
std::size_t restricted_form_kernel(const Covector& gamma, const Subalgebra& h0, const Subalgebra& h1,
                                   std::vector<Vec>* kernel = nullptr);

/// index(sub) >= index(g)
bool vinberg_check(const LieAlgebra& g, const LieAlgebra& sub);

}  // namespace nilcent
