#include "spinstar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinstar {

double hermiticity_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem eigh(const ComplexMatrix& a, Tolerance herm_tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("eigh: input is not square");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("eigh: input has non-finite entries");
  }
  const double scale = a.cwiseAbs().maxCoeff();
  const double defect = hermiticity_defect(a);
  if (defect > herm_tol.bound(scale)) {
    std::ostringstream msg;
    msg << "eigh: input is not Hermitian (defect " << defect << ", bound "
        << herm_tol.bound(scale) << ")";
    throw std::invalid_argument(msg.str());
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigh: eigensolver did not converge (off-diagonal residual above "
        << Eigen::NumTraits<double>::epsilon() * scale << ")";
    throw std::runtime_error(msg.str());
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix spectral_apply(const EigenSystem& es, const RealVector& mapped) {
  if (!mapped.allFinite()) {
    throw std::runtime_error("spectral_apply: map produced a non-finite value");
  }
  ComplexMatrix m = es.vectors * mapped.asDiagonal() * es.vectors.adjoint();
  // exact Hermiticity for downstream index-symmetry arguments
  return ((m + m.adjoint()) / 2.0).eval();
}

double trace_norm_hermitian(const ComplexMatrix& a, Tolerance herm_tol) {
  return eigh(a, herm_tol).values.cwiseAbs().sum();
}

namespace {

// One Newton polish step; keeps the trigonometric roots at residual ~ulp.
double polish_root(double c0, double c1, double c2, double c3, double r) {
  const double p = ((c3 * r + c2) * r + c1) * r + c0;
  const double dp = (3.0 * c3 * r + 2.0 * c2) * r + c1;
  if (dp != 0.0) {
    const double step = p / dp;
    if (std::abs(step) < 1e-6 * (1.0 + std::abs(r))) return r - step;
  }
  return r;
}

}  // namespace

std::array<double, 3> cubic_real_roots(double c0, double c1, double c2, double c3) {
  if (c3 == 0.0) {
    throw std::invalid_argument("cubic_real_roots: leading coefficient is zero");
  }
  // depressed form t^3 + p t + q with l = t - c2/(3 c3)
  const double b = c2 / c3;
  const double c = c1 / c3;
  const double d = c0 / c3;
  const double shift = -b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

  const double coeff_scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
  std::array<double, 3> roots{};
  if (p == 0.0 && q == 0.0) {
    roots = {shift, shift, shift};
  } else {
    if (p >= 0.0) {
      // t^3 + p t + q with p >= 0 is monotone: a single real root
      throw std::domain_error("cubic_real_roots: complex-conjugate root pair (p >= 0)");
    }
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double cos_arg = 3.0 * q / (p * m);
    if (std::abs(cos_arg) > 1.0) {
      if (std::abs(cos_arg) > 1.0 + 1e-9) {
        throw std::domain_error("cubic_real_roots: complex-conjugate root pair (discriminant < 0)");
      }
      cos_arg = cos_arg > 0.0 ? 1.0 : -1.0;
    }
    const double theta = std::acos(cos_arg) / 3.0;
    constexpr double two_pi_third = 2.0943951023931953;
    for (int k = 0; k < 3; ++k) {
      roots[k] = m * std::cos(theta - two_pi_third * k) + shift;
    }
  }
  for (double& r : roots) {
    r = polish_root(c0, c1, c2, c3, r);
  }
  std::sort(roots.begin(), roots.end());
  for (double r : roots) {
    const double residual = std::abs(((c3 * r + c2) * r + c1) * r + c0);
    if (residual > 1e-9 * coeff_scale) {
      std::ostringstream msg;
      msg << "cubic_real_roots: residual " << residual << " exceeds 1e-9 * " << coeff_scale;
      throw std::runtime_error(msg.str());
    }
  }
  return roots;
}

}  // namespace spinstar
