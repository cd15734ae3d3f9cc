#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace spinstar {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute-plus-relative comparison bound: abs + rel * scale.
struct Tolerance {
  double abs = 0.0;
  double rel = 0.0;

  double bound(double scale) const { return abs + rel * scale; }
};

/// Eigendecomposition of a Hermitian matrix. values are sorted ascending and
/// vectors.col(k) is the unit eigenvector paired with values[k]. Inside a
/// degenerate eigenvalue cluster no particular basis is promised; compare
/// eigenspace projectors, not individual columns.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;

  Eigen::Index dim() const { return values.size(); }
};

/// max |a(j,k) - conj(a(k,j))| over all entries.
double hermiticity_defect(const ComplexMatrix& a);

/// Hermitian eigendecomposition. Throws std::invalid_argument when the input
/// is not square or not Hermitian within herm_tol, std::runtime_error when the
/// solver fails to converge.
EigenSystem eigh(const ComplexMatrix& a, Tolerance herm_tol = {1e-12, 0.0});

/// sum_k mapped[k] * v_k v_k^dagger; Hermitian by construction.
ComplexMatrix spectral_apply(const EigenSystem& es, const RealVector& mapped);

/// sum_k f(values[k]) * v_k v_k^dagger for a real scalar map f.
/// Throws std::runtime_error if f produces a non-finite value.
template <typename F>
ComplexMatrix spectral_map(const EigenSystem& es, F&& f) {
  RealVector mapped(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    mapped[k] = f(es.values[k]);
  }
  return spectral_apply(es, mapped);
}

/// sum_i |lambda_i| of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& a, Tolerance herm_tol = {1e-12, 0.0});

/// Ascending real roots of c3 l^3 + c2 l^2 + c1 l + c0 = 0, computed with the
/// trigonometric three-real-root branch of the depressed cubic. Throws
/// std::invalid_argument when c3 == 0 and std::domain_error when the
/// discriminant signals a complex-conjugate pair.
std::array<double, 3> cubic_real_roots(double c0, double c1, double c2, double c3);

}  // namespace spinstar
