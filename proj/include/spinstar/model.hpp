#pragma once

#include "spinstar/hilbert.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace spinstar {

/// Coupling scheme of the three outer spins to the central one:
/// homogeneous (c, c, c), type A (c, c*x, c), type B (c, c*x, c*x^2).
enum class Scheme { Homogeneous, TypeA, TypeB };

const char* to_string(Scheme s);

/// Physical configuration. omega0 is the Bohr frequency (the energy unit),
/// c the base coupling in units of omega0, x the dimensionless inhomogeneity
/// parameter. The homogeneous scheme pins x to 1.
struct SpinStarParams {
  double omega0 = 1.0;
  Scheme scheme = Scheme::Homogeneous;
  double c = 0.0;
  double x = 1.0;
};

/// Validates (omega0 > 0, c >= 0, x > 0) and normalizes x = 1 for the
/// homogeneous scheme. Throws std::invalid_argument / std::domain_error.
SpinStarParams make_params(Scheme scheme, double c, double x = 1.0, double omega0 = 1.0);

/// Derived couplings (c1, c2, c3) in absolute units.
std::array<double, 3> couplings(const SpinStarParams& p);

/// Canonical label order {C, S1, S2, S3}.
const Labels& star_labels();

/// H = (omega0/2) sum_i sigma_z^i + sum_i c_i (sigma+^C sigma-^i + h.c.),
/// a 16x16 Hermitian, traceless matrix commuting with the total sigma_z.
ComplexMatrix build_hamiltonian(const SpinStarParams& p);

/// One closed-form level of the type-A family.
struct AnalyticLevel {
  std::string label;     // "E1+", "E1-", ..., "E6(A)", "E6(B)", ..., "E9"
  double energy = 0.0;   // absolute units (omega0 scaled in)
  ComplexVector vector;  // 16-component unit eigenvector carrying this energy
};

/// Closed-form eigensystem of the type-A Hamiltonian (x = 1 reproduces the
/// homogeneous model). Each vector is assigned to the energy it actually
/// carries under H; validate_appendix reports where that assignment differs
/// from the printed table. Throws std::domain_error for x <= 0.
std::vector<AnalyticLevel> analytic_spectrum_type_a(double c, double x, double omega0 = 1.0);

/// The (c, x) locus where the two lowest type-A levels cross, in units of
/// omega0: c(x) = (x^2+4+a)/(4x) + sqrt((x^2+5+a)/2)/2, a = sqrt(16+10x^2+x^4).
double crossing_curve_c_of_x(double x);

struct AppendixPointCheck {
  double c = 0.0;
  double x = 0.0;
  double eigenvalue_dev = 0.0;  // max |analytic - numeric| over sorted energies
  double projector_dev = 0.0;   // max Frobenius deviation over eigenspace projectors
};

/// Cross-validation of the closed forms against numerical diagonalization.
/// Disagreements with the printed table are findings, never failures.
struct ValidationReport {
  std::vector<AppendixPointCheck> points;
  double max_eigenvalue_dev = 0.0;
  double max_projector_dev = 0.0;
  std::vector<std::string> findings;

  std::string to_text() const;
};

ValidationReport validate_appendix(const std::vector<std::pair<double, double>>& grid_cx,
                                   double omega0 = 1.0);

}  // namespace spinstar
