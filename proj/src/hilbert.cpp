#include "spinstar/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinstar {

const char* to_string(Qubit q) {
  switch (q) {
    case Qubit::C: return "C";
    case Qubit::S1: return "S1";
    case Qubit::S2: return "S2";
    case Qubit::S3: return "S3";
  }
  return "?";
}

namespace {

void check_labels(const Labels& labels) {
  if (labels.empty()) throw std::invalid_argument("empty label list");
  std::set<Qubit> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("duplicate labels");
}

int position_of(Qubit q, const Labels& labels) {
  const auto it = std::find(labels.begin(), labels.end(), q);
  if (it == labels.end()) {
    std::ostringstream msg;
    msg << "label " << to_string(q) << " not part of the state";
    throw std::invalid_argument(msg.str());
  }
  return static_cast<int>(it - labels.begin());
}

}  // namespace

DensityMatrix make_density_matrix(ComplexMatrix op, Labels labels, Tolerance herm_tol,
                                  double trace_tol, double psd_tol) {
  check_labels(labels);
  const auto dim = Eigen::Index{1} << labels.size();
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument("density matrix dimension does not match label count");
  }
  if (!op.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  const double defect = hermiticity_defect(op);
  if (defect > herm_tol.bound(op.cwiseAbs().maxCoeff())) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  const double tr = op.trace().real();
  if (std::abs(tr - 1.0) > trace_tol || std::abs(op.trace().imag()) > trace_tol) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " differs from 1 beyond " << trace_tol;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -psd_tol) {
    std::ostringstream msg;
    msg << "density matrix has eigenvalue " << solver.eigenvalues().minCoeff()
        << " below -" << psd_tol;
    throw std::invalid_argument(msg.str());
  }
  return DensityMatrix{std::move(op), std::move(labels)};
}

DensityMatrix pure_state(const ComplexVector& psi, Labels labels) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("pure_state: zero vector");
  const ComplexVector unit = psi / norm;
  return make_density_matrix(unit * unit.adjoint(), std::move(labels));
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << -1, 0, 0, 1;
  return m;
}

Eigen::Matrix2cd sigma_plus() {
  Eigen::Matrix2cd m;
  m << 0, 0, 1, 0;
  return m;
}

Eigen::Matrix2cd sigma_minus() {
  Eigen::Matrix2cd m;
  m << 0, 1, 0, 0;
  return m;
}

ComplexMatrix embed_single_site(const Eigen::Matrix2cd& op2, Qubit site, const Labels& labels) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  const int shift = n - 1 - position_of(site, labels);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index mask = Eigen::Index{1} << shift;

  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Eigen::Index bj = (j >> shift) & 1;
    for (Eigen::Index a = 0; a < 2; ++a) {
      const Eigen::Index i = (j & ~mask) | (a << shift);
      out(i, j) = op2(a, bj);
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Labels& keep) {
  check_labels(rho.labels);
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  Labels kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate labels in keep set");
  }
  const int n = static_cast<int>(rho.labels.size());
  const int m = static_cast<int>(kept.size());

  std::vector<int> keep_shift(m);
  for (int k = 0; k < m; ++k) {
    keep_shift[k] = n - 1 - position_of(kept[k], rho.labels);
  }
  std::vector<int> traced_shift;
  for (int pos = 0; pos < n; ++pos) {
    const Qubit q = rho.labels[pos];
    if (std::find(kept.begin(), kept.end(), q) == kept.end()) {
      traced_shift.push_back(n - 1 - pos);
    }
  }

  const Eigen::Index out_dim = Eigen::Index{1} << m;
  const Eigen::Index traced_count = Eigen::Index{1} << traced_shift.size();

  const auto expand = [&](Eigen::Index bits, const std::vector<int>& shifts) {
    Eigen::Index full = 0;
    for (std::size_t k = 0; k < shifts.size(); ++k) {
      const Eigen::Index bit = (bits >> (shifts.size() - 1 - k)) & 1;
      full |= bit << shifts[k];
    }
    return full;
  };

  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index r = 0; r < out_dim; ++r) {
    const Eigen::Index row_base = expand(r, keep_shift);
    for (Eigen::Index s = 0; s < out_dim; ++s) {
      const Eigen::Index col_base = expand(s, keep_shift);
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < traced_count; ++t) {
        const Eigen::Index env = expand(t, traced_shift);
        sum += rho.op(row_base | env, col_base | env);
      }
      out(r, s) = sum;
    }
  }
  return DensityMatrix{std::move(out), std::move(kept)};
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Labels& labels,
                                const Labels& part) {
  check_labels(labels);
  if (part.empty()) throw std::invalid_argument("partial_transpose: empty subset");
  if (part.size() >= labels.size()) {
    throw std::invalid_argument("partial_transpose: subset must be proper");
  }
  std::set<Qubit> part_set(part.begin(), part.end());
  if (part_set.size() != part.size()) {
    throw std::invalid_argument("partial_transpose: duplicate labels in subset");
  }
  const int n = static_cast<int>(labels.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("partial_transpose: dimension does not match labels");
  }
  Eigen::Index mask = 0;
  for (Qubit q : part) {
    mask |= Eigen::Index{1} << (n - 1 - position_of(q, labels));
  }

  ComplexMatrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Eigen::Index ip = (i & ~mask) | (j & mask);
      const Eigen::Index jp = (j & ~mask) | (i & mask);
      out(ip, jp) = m(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const Labels& part) {
  return partial_transpose(rho.op, rho.labels, part);
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * trace_norm_hermitian(a - b, {1e-10, 1e-10});
}

}  // namespace spinstar
