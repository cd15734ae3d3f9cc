#pragma once

#include "spinstar/linalg.hpp"

#include <string>
#include <vector>

namespace spinstar {

/// Tensor-factor labels of the star. The enum order C < S1 < S2 < S3 fixes the
/// factor position: the first label in a label list is the most significant
/// bit of the basis index, so |sC s1 s2 s3> maps to sC*8 + s1*4 + s2*2 + s3.
enum class Qubit : int { C = 0, S1 = 1, S2 = 2, S3 = 3 };

using Labels = std::vector<Qubit>;

const char* to_string(Qubit q);

/// Density operator tagged with its ordered subsystem labels (dim = 2^n).
struct DensityMatrix {
  ComplexMatrix op;
  Labels labels;

  Eigen::Index dim() const { return op.rows(); }
};

/// Validates Hermiticity (1e-12), unit trace (1e-12) and positivity
/// (min eigenvalue >= -1e-10) before tagging. Throws std::invalid_argument.
DensityMatrix make_density_matrix(ComplexMatrix op, Labels labels,
                                  Tolerance herm_tol = {1e-12, 0.0},
                                  double trace_tol = 1e-12,
                                  double psd_tol = 1e-10);

/// |psi><psi| / <psi|psi>.
DensityMatrix pure_state(const ComplexVector& psi, Labels labels);

/// Pauli matrices in the basis |0> = (sigma_z = -1), |1> = (sigma_z = +1).
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd sigma_plus();   // |1><0|
Eigen::Matrix2cd sigma_minus();  // |0><1|

/// Kronecker embedding of a single-site operator, identity on all other
/// factors, factor order given by labels.
ComplexMatrix embed_single_site(const Eigen::Matrix2cd& op2, Qubit site, const Labels& labels);

/// Partial trace onto the kept subsystems; result labels are keep in canonical
/// (enum) order.
DensityMatrix partial_trace(const DensityMatrix& rho, const Labels& keep);

/// Transpose the indices of the given subsystem subset. Involutive bit-exactly.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Labels& labels, const Labels& part);
ComplexMatrix partial_transpose(const DensityMatrix& rho, const Labels& part);

/// (1/2) || a - b ||_1 for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace spinstar
