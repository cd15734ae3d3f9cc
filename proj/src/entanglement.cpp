#include "spinstar/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinstar {

double bipartite_negativity(const DensityMatrix& rho, const Labels& part) {
  const double tn = trace_norm_hermitian(partial_transpose(rho, part), {1e-10, 1e-12});
  const double neg = tn - 1.0;
  // |neg| below the eigensolver noise floor is an exact zero; the geometric
  // mean downstream would otherwise amplify +1e-15 noise to ~1e-5
  if (std::abs(neg) < 1e-12) return 0.0;
  return std::max(0.0, neg);
}

TripartiteNegativityBreakdown tripartite_negativity(const DensityMatrix& rho) {
  if (rho.labels.size() != 3) {
    throw std::invalid_argument("tripartite_negativity: state must have exactly 3 labels");
  }
  TripartiteNegativityBreakdown b;
  b.n1_23 = bipartite_negativity(rho, {rho.labels[0]});
  b.n2_13 = bipartite_negativity(rho, {rho.labels[1]});
  b.n3_12 = bipartite_negativity(rho, {rho.labels[2]});
  if (b.n1_23 <= 0.0 || b.n2_13 <= 0.0 || b.n3_12 <= 0.0) {
    b.n123 = 0.0;
  } else {
    b.n123 = std::cbrt(b.n1_23 * b.n2_13 * b.n3_12);
  }
  return b;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.labels.size() != 2) {
    throw std::invalid_argument("concurrence: state must have exactly 2 labels");
  }
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  {
    const Eigen::Matrix2cd y = pauli_y();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) yy(a * 2 + c, b * 2 + d) = y(a, b) * y(c, d);
  }
  const ComplexMatrix flipped = yy * rho.op.conjugate() * yy;
  const auto clamped_sqrt = [](double v) { return std::sqrt(std::max(0.0, v)); };
  const ComplexMatrix root = spectral_map(eigh(rho.op, {1e-10, 1e-12}), clamped_sqrt);
  const ComplexMatrix inner = root * flipped * root;
  const EigenSystem es = eigh(inner, {1e-9, 1e-9});
  // eigenvalues below the relative noise floor are exact zeros; taking their
  // square root would inflate 1e-16 rounding into 1e-8
  const double floor = 1e-13 * std::max(0.0, es.values.maxCoeff());
  double c = 0.0;
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double mu = es.values[k] > floor ? std::sqrt(es.values[k]) : 0.0;
    c += (k == 3 ? mu : -mu);
  }
  return std::max(0.0, c);
}

namespace {

ComplexVector basis8(int s1, int s2, int s3) {
  ComplexVector v = ComplexVector::Zero(8);
  v[s1 * 4 + s2 * 2 + s3] = 1.0;
  return v;
}

const Labels& outer_labels() {
  static const Labels labels{Qubit::S1, Qubit::S2, Qubit::S3};
  return labels;
}

}  // namespace

Rho2MinusFamily rho2minus(double x) {
  if (!(x > 0.0)) throw std::domain_error("rho2minus: x must be positive");
  const double mu = (std::sqrt(8.0 + x * x) - x) / 2.0;
  const double aleph = 1.0 / std::sqrt(2.0 + mu * mu);

  Rho2MinusFamily fam;
  fam.x = x;
  fam.aleph = aleph;
  fam.w1 = aleph * (basis8(0, 1, 1) + basis8(1, 1, 0) + mu * basis8(1, 0, 1));
  fam.w2 = aleph * (basis8(1, 0, 0) + basis8(0, 0, 1) + mu * basis8(0, 1, 0));
  const ComplexMatrix op = 0.5 * (fam.w1 * fam.w1.adjoint() + fam.w2 * fam.w2.adjoint());
  fam.rho = make_density_matrix(op, outer_labels());
  return fam;
}

double closed_form_negativity(double x) {
  if (!(x > 0.0)) throw std::domain_error("closed_form_negativity: x must be positive");
  const double s8 = std::sqrt(8.0 + x * x);
  const double x2 = x * x;
  const double c0 = -10.0 * x + x * x2 + (2.0 + x2) * s8;
  const double c1 = -32.0 * x - 4.0 * x * x2 - 48.0 * s8 - 4.0 * x2 * s8;
  const double c2 = 128.0 * x + 16.0 * x * x2 - 384.0 * s8 - 48.0 * x2 * s8;
  const double c3 = 1024.0 * s8 + 128.0 * x2 * s8;

  std::array<double, 3> lambda{};
  try {
    lambda = cubic_real_roots(c0, c1, c2, c3);
  } catch (const std::domain_error&) {
    throw std::domain_error(
        "closed_form_negativity: cubic has a complex-conjugate root pair at x = " +
        std::to_string(x) + " (outside the validity region)");
  }
  const double abs_sum = std::abs(lambda[0]) + std::abs(lambda[1]) + std::abs(lambda[2]);

  const double factor1 = x + s8 - std::sqrt(2.0 * (20.0 + x * (x + s8)));
  const double factor2 = x - 3.0 * s8 + 8.0 * s8 * abs_sum;
  const double braced = -1.0 / std::pow(8.0 + x2, 1.5) * factor1 * factor2 * factor2;
  if (braced <= 0.0) return 0.0;
  return std::cbrt(braced) / std::pow(2.0, 5.0 / 3.0);
}

DensityMatrix named_state(NamedState name, std::optional<double> x) {
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const ComplexVector w =
      inv_sqrt3 * (basis8(1, 0, 0) + basis8(0, 1, 0) + basis8(0, 0, 1));
  const ComplexVector w_tilde =
      inv_sqrt3 * (basis8(0, 1, 1) + basis8(1, 0, 1) + basis8(1, 1, 0));

  switch (name) {
    case NamedState::W:
      return pure_state(w, outer_labels());
    case NamedState::WTilde:
      return pure_state(w_tilde, outer_labels());
    case NamedState::RhoA1:
      return pure_state(basis8(0, 0, 0), outer_labels());
    case NamedState::RhoA2: {
      const ComplexVector zero = basis8(0, 0, 0);
      const ComplexMatrix op =
          0.5 * (w * w.adjoint() + zero * zero.adjoint());
      return make_density_matrix(op, outer_labels());
    }
    case NamedState::RhoA3: {
      const ComplexMatrix op =
          0.5 * (w * w.adjoint() + w_tilde * w_tilde.adjoint());
      return make_density_matrix(op, outer_labels());
    }
    case NamedState::Rho2Minus: {
      if (!x) throw std::invalid_argument("named_state: RHO_2MINUS requires x");
      return rho2minus(*x).rho;
    }
    case NamedState::PsiMB: {
      const auto k = [](int sc, int s1, int s2, int s3) {
        ComplexVector v = ComplexVector::Zero(16);
        v[sc * 8 + s1 * 4 + s2 * 2 + s3] = 1.0;
        return v;
      };
      const ComplexVector psi = 0.292 * (k(1, 1, 0, 0) - k(0, 0, 1, 1)) +
                                0.471 * (k(1, 0, 0, 1) - k(0, 1, 1, 0)) +
                                0.439 * (k(1, 0, 1, 0) - k(0, 1, 0, 1));
      return pure_state(psi, star_labels());
    }
  }
  throw std::invalid_argument("named_state: unknown name");
}

}  // namespace spinstar
