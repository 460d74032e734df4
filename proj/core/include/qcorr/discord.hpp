#pragma once

#include <string>
#include <vector>

#include "qcorr/entropy.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

/// Rank-1 projective measurement {U|i><i|U^dag} given by a unitary rotation
/// of the computational basis.
class MeasurementSetting {
public:
  explicit MeasurementSetting(Matrix rotation, double unitary_tol = 1e-10);

  int dim() const { return static_cast<int>(u_.rows()); }
  const Matrix& rotation() const { return u_; }
  Matrix projector(int outcome) const;

private:
  Matrix u_;
};

/// Unitary from d^2 - d angles: product of Givens rotations with phases over
/// all index pairs. Column phases are left free; they do not affect the
/// projectors.
Matrix unitary_from_angles(int dim, const Eigen::VectorXd& angles);
inline int angle_count(int dim) { return dim * dim - dim; }

struct EnsembleOutcome {
  double probability;
  DensityMatrix post_state;  // conditional state on the unmeasured side
};

struct MeasuredEnsemble {
  std::vector<EnsembleOutcome> outcomes;
  Subsystem measured_side;
  int omitted_outcomes;  // outcomes with probability <= 1e-14
};

/// Measures `side` with the given setting; conditional states live on the
/// other side. Near-zero-probability outcomes are dropped and counted.
MeasuredEnsemble measure_ensemble(const BipartiteState& s, const MeasurementSetting& m,
                                  Subsystem side);

/// Holevo quantity of the ensemble, computed both as
/// S(rho_bar) - sum p_i S(rho_i) and as sum p_i S(rho_i || rho_bar); the two
/// must agree within xcheck_tol, the entropy-difference form is returned.
double holevo_value(const MeasuredEnsemble& e, double xcheck_tol = 1e-9);

struct OptimizerConfig {
  int restarts = 32;
  std::uint64_t seed = 0;
  int max_iters = 500;
  double ftol = 1e-10;
  std::string measurement_class = "projective";
};

struct CorrelationResult {
  double value;  // bits
  MeasurementSetting best_measurement;
  int restarts_used;
  double spread;  // max - min over restart optima
  std::string measurement_class;
};

/// Classical correlation: maximum Holevo value over rank-1 projective
/// measurements on `side`, via multi-start Nelder-Mead on the angle chart.
/// Deterministic given cfg.seed.
CorrelationResult classical_correlation(const BipartiteState& s, Subsystem side,
                                        const OptimizerConfig& cfg = {});

struct DiscordResult {
  double discord;        // bits, clamped at 0 within clamp_tol
  double mutual_info;    // bits
  CorrelationResult correlation;
};

/// D = I - C with measurements on `side`. Negative values beyond clamp_tol
/// signal optimizer failure and throw.
DiscordResult quantum_discord(const BipartiteState& s, Subsystem side,
                              const OptimizerConfig& cfg = {}, double clamp_tol = 1e-3);

/// Zero-discord state sum_i p_i |b_i><b_i| (x) rho_i with {|b_i>} the columns
/// of `basis`.
BipartiteState classical_quantum_state(const std::vector<double>& probs,
                                       const Matrix& basis,
                                       const std::vector<DensityMatrix>& states);

}  // namespace qcorr
