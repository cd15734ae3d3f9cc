#include "spinstar/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace spinstar {

DensityMatrix gibbs_state(const ComplexMatrix& h, Temperature temp, const Labels& labels) {
  if (temp.t == 0.0) {
    throw std::invalid_argument("gibbs_state: t = 0, use ground_manifold_state");
  }
  if (temp.t < 0.0) throw std::domain_error("gibbs_state: negative temperature");

  const EigenSystem es = eigh(h);
  const double ground = es.values[0];
  RealVector weights(es.dim());
  for (Eigen::Index k = 0; k < es.dim(); ++k) {
    weights[k] = std::exp(-(es.values[k] - ground) / temp.t);
  }
  weights /= weights.sum();
  return make_density_matrix(spectral_apply(es, weights), labels);
}

DensityMatrix ground_manifold_state(const ComplexMatrix& h, double degeneracy_tol,
                                    const Labels& labels) {
  if (!(degeneracy_tol > 0.0)) {
    throw std::invalid_argument("ground_manifold_state: degeneracy_tol must be positive");
  }
  const EigenSystem es = eigh(h);
  const double ground = es.values[0];
  Eigen::Index rank = 0;
  while (rank < es.dim() && es.values[rank] - ground <= degeneracy_tol) ++rank;

  RealVector weights = RealVector::Zero(es.dim());
  weights.head(rank).setConstant(1.0 / static_cast<double>(rank));
  return make_density_matrix(spectral_apply(es, weights), labels);
}

}  // namespace spinstar
