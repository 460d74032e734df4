#include "qcorr/entropy.hpp"

#include <cmath>
#include <limits>

namespace qcorr {

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > kEigCutoff) s -= lam * std::log2(lam);
  }
  if (s < 0.0) s = 0.0;
  const double max = std::log2(static_cast<double>(rho.dim()));
  return s > max ? max : s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw StructuralError("relative_entropy: dimension mismatch " +
                          std::to_string(rho.dim()) + " vs " + std::to_string(sigma.dim()));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.matrix());
  const auto& lam = es.eigenvalues();
  const auto& vecs = es.eigenvectors();

  // Overlap of rho with each sigma eigenvector: <v_i|rho|v_i>.
  double kernel_weight = 0.0;
  double cross = 0.0;  // tr(rho log2 sigma)
  for (int i = 0; i < sigma.dim(); ++i) {
    const double w = (vecs.col(i).adjoint() * rho.matrix() * vecs.col(i))(0, 0).real();
    if (lam(i) <= kEigCutoff) {
      kernel_weight += w;
    } else {
      cross += w * std::log2(lam(i));
    }
  }
  if (kernel_weight > kSupportTol) return std::numeric_limits<double>::infinity();

  double s = -von_neumann_entropy(rho) - cross;
  return s < 0.0 ? 0.0 : s;
}

double mutual_information(const BipartiteState& s, double xcheck_tol) {
  const DensityMatrix rho_a = partial_trace(s, Subsystem::A);
  const DensityMatrix rho_b = partial_trace(s, Subsystem::B);

  const double additive = von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) -
                          von_neumann_entropy(s.state());
  const double relent = relative_entropy(s.state(), tensor(rho_a, rho_b).state());

  if (std::abs(additive - relent) > xcheck_tol) {
    throw NumericalConsistencyError(
        "mutual_information: entropy-sum and relative-entropy routes disagree: " +
        std::to_string(additive) + " vs " + std::to_string(relent));
  }
  return additive < 0.0 ? 0.0 : additive;
}

}  // namespace qcorr
