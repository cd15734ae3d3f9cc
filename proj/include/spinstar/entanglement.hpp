#pragma once

#include "spinstar/thermal.hpp"

#include <optional>

namespace spinstar {

/// Negativity of the bipartition (part | rest): ||rho^T_part||_1 - 1.
/// Note the convention: this is the trace norm minus one, twice the halved
/// definition found elsewhere. Values in (-1e-10, 0) from rounding clamp to 0.
double bipartite_negativity(const DensityMatrix& rho, const Labels& part);

/// The three one-vs-rest negativities of a 3-qubit state and their geometric
/// mean. Indices refer to positions in rho.labels order.
struct TripartiteNegativityBreakdown {
  double n1_23 = 0.0;
  double n2_13 = 0.0;
  double n3_12 = 0.0;
  double n123 = 0.0;  // (n1_23 * n2_13 * n3_12)^(1/3), exactly 0 if any factor is 0
};

TripartiteNegativityBreakdown tripartite_negativity(const DensityMatrix& rho);

/// Wootters concurrence of a 2-qubit state, computed through the Hermitian
/// sqrt(sqrt(rho) rho_tilde sqrt(rho)) form.
double concurrence(const DensityMatrix& rho);

/// The x-parametrized rank-2 mixture of two Werner-like 3-qubit states that
/// the reduced outer-spin state equals in the type-A ground region:
/// rho = (|w1><w1| + |w2><w2|)/2 with
/// |w1> = aleph (|011> + |110> + mu |101>), |w2> = aleph (|100> + |001> + mu |010>),
/// mu = (sqrt(8+x^2)-x)/2, aleph = (2 + mu^2)^(-1/2).
struct Rho2MinusFamily {
  double x = 1.0;
  double aleph = 0.0;
  ComplexVector w1;
  ComplexVector w2;
  DensityMatrix rho;
};

Rho2MinusFamily rho2minus(double x);

/// Closed-form tripartite negativity of rho2minus(x), evaluated from the
/// printed algebraic expression whose lambda_i are the roots of a cubic.
/// Throws std::domain_error when x <= 0 or the cubic leaves the
/// three-real-root region.
double closed_form_negativity(double x);

enum class NamedState {
  W,          // (|100> + |010> + |001|)/sqrt(3) on {S1,S2,S3}
  WTilde,     // (|011> + |101> + |110|)/sqrt(3)
  RhoA1,      // |000><000|
  RhoA2,      // (|W><W| + |000><000|)/2
  RhoA3,      // (|W><W| + |Wt><Wt|)/2
  Rho2Minus,  // rho2minus(x), requires x
  PsiMB,      // 4-qubit pure state with the quoted 0.292/0.471/0.439 amplitudes
};

DensityMatrix named_state(NamedState name, std::optional<double> x = std::nullopt);

}  // namespace spinstar
