#pragma once

#include "qcorr/channel.hpp"
#include "qcorr/entropy.hpp"

namespace qcorr {

/// 1/2 ||rho - sigma||_1 via the spectrum of the Hermitian difference.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Petz recovery map of `ch` with reference state `sigma`: Kraus set
/// {sigma^{1/2} K_i^dag (ch sigma)^{-1/2}}. Inverse square roots are taken
/// spectrally on the support (eigenvalues > kEigCutoff); rank-deficient
/// references restrict the map to their support.
KrausChannel petz_map(const KrausChannel& ch, const DensityMatrix& sigma);

struct SufficiencyTolerances {
  double equality = 1e-9;   // |gap| below this counts as relative-entropy equality
  double recovery = 1e-6;   // trace-distance threshold for "recovered"
};

/// Relative-entropy gap under a channel plus Petz-recovery errors: the
/// quantities sufficiency of a channel for a state pair is judged by.
struct SufficiencyReport {
  double s_before;              // S(rho || sigma)
  double s_after;               // S(ch rho || ch sigma)
  double gap;                   // s_before - s_after, >= 0 up to tolerance
  double recovery_error_rho;    // trace distance of the Petz round trip on rho
  double recovery_error_sigma;
  bool rho_recovered;
  bool sigma_recovered;
};

SufficiencyReport check_sufficiency(const KrausChannel& ch, const DensityMatrix& rho,
                                    const DensityMatrix& sigma,
                                    const SufficiencyTolerances& tols = {});

}  // namespace qcorr
