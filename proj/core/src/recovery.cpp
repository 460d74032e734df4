#include "qcorr/recovery.hpp"

#include <cmath>

namespace qcorr {

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw StructuralError("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix() - sigma.matrix(),
                                           Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

namespace {

// f(M) spectrally, with eigenvalues at or below the cutoff mapped to 0.
Matrix spectral_apply(const Matrix& m, double (*f)(double)) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(m));
  Eigen::VectorXd vals = es.eigenvalues();
  for (int i = 0; i < vals.size(); ++i) {
    vals(i) = vals(i) > kEigCutoff ? f(vals(i)) : 0.0;
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

double sqrt_fn(double x) { return std::sqrt(x); }
double inv_sqrt_fn(double x) { return 1.0 / std::sqrt(x); }

}  // namespace

KrausChannel petz_map(const KrausChannel& ch, const DensityMatrix& sigma) {
  if (sigma.dim() != ch.dim_in()) {
    throw StructuralError("petz_map: reference state dimension mismatch");
  }
  const Matrix sigma_sqrt = spectral_apply(sigma.matrix(), sqrt_fn);
  const Matrix image = apply(ch, sigma).matrix();
  const Matrix image_inv_sqrt = spectral_apply(image, inv_sqrt_fn);

  std::vector<Matrix> kraus;
  kraus.reserve(ch.kraus().size());
  for (const auto& k : ch.kraus()) {
    kraus.push_back(sigma_sqrt * k.adjoint() * image_inv_sqrt);
  }

  // Full-rank sigma and image give a genuinely CPTP map; otherwise the map is
  // trace-preserving only on the support of ch(sigma).
  Matrix sum = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const double dev =
      (sum - Matrix::Identity(ch.dim_out(), ch.dim_out())).cwiseAbs().maxCoeff();
  if (dev <= kCptpTol) return KrausChannel(std::move(kraus));
  return KrausChannel::unchecked(std::move(kraus));
}

SufficiencyReport check_sufficiency(const KrausChannel& ch, const DensityMatrix& rho,
                                    const DensityMatrix& sigma,
                                    const SufficiencyTolerances& tols) {
  const double s_before = relative_entropy(rho, sigma);
  if (std::isinf(s_before)) {
    throw UnsupportedInstanceError(
        "check_sufficiency: S(rho||sigma) is infinite; equality is undefined");
  }
  const DensityMatrix rho_out = apply(ch, rho);
  const DensityMatrix sigma_out = apply(ch, sigma);
  const double s_after = relative_entropy(rho_out, sigma_out);

  const KrausChannel petz = petz_map(ch, sigma);

  SufficiencyReport r{};
  r.s_before = s_before;
  r.s_after = s_after;
  r.gap = s_before - s_after;
  r.recovery_error_rho = trace_distance(apply(petz, rho_out), rho);
  r.recovery_error_sigma = trace_distance(apply(petz, sigma_out), sigma);
  r.rho_recovered = r.recovery_error_rho <= tols.recovery;
  r.sigma_recovered = r.recovery_error_sigma <= tols.recovery;
  return r;
}

}  // namespace qcorr
