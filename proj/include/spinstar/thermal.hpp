#pragma once

#include "spinstar/hilbert.hpp"
#include "spinstar/model.hpp"

namespace spinstar {

/// k_B T in the same energy units as the Hamiltonian it is paired with
/// (the dimensionless k_B T / omega0 when H is built with omega0 = 1).
/// t = 0 is handled by the ground-manifold path, not by gibbs_state.
struct Temperature {
  double t = 0.0;
};

/// rho = exp(-H/t) / Z, evaluated as sum_k e^{-(l_k - l_min)/t} v_k v_k^+ / Z
/// so small t cannot overflow. Throws std::invalid_argument for t = 0 (use
/// ground_manifold_state) and std::domain_error for t < 0.
DensityMatrix gibbs_state(const ComplexMatrix& h, Temperature temp,
                          const Labels& labels = star_labels());

/// Equal-weight mixture over the eigenspace {l : l - l_min <= degeneracy_tol};
/// the t -> 0 limit of gibbs_state away from level crossings.
DensityMatrix ground_manifold_state(const ComplexMatrix& h, double degeneracy_tol = 1e-9,
                                    const Labels& labels = star_labels());

}  // namespace spinstar
