#include "qcorr/discord.hpp"

#include <cmath>
#include <limits>

#include "qcorr/neldermead.hpp"

namespace qcorr {

MeasurementSetting::MeasurementSetting(Matrix rotation, double unitary_tol)
    : u_(std::move(rotation)) {
  const double dev =
      (u_.adjoint() * u_ - Matrix::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
  if (u_.rows() != u_.cols() || dev > unitary_tol) {
    throw ValidationError("measurement rotation is not unitary, deviation " +
                          std::to_string(dev));
  }
}

Matrix MeasurementSetting::projector(int outcome) const {
  return u_.col(outcome) * u_.col(outcome).adjoint();
}

Matrix unitary_from_angles(int dim, const Eigen::VectorXd& angles) {
  if (angles.size() != angle_count(dim)) {
    throw StructuralError("unitary_from_angles: expected " +
                          std::to_string(angle_count(dim)) + " angles, got " +
                          std::to_string(angles.size()));
  }
  Matrix u = Matrix::Identity(dim, dim);
  int idx = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const double th = angles(idx);
      const double ph = angles(idx + 1);
      idx += 2;
      Matrix g = Matrix::Identity(dim, dim);
      const Complex phase(std::cos(ph), std::sin(ph));
      g(i, i) = std::cos(th);
      g(j, j) = std::cos(th);
      g(i, j) = -phase * std::sin(th);
      g(j, i) = std::conj(phase) * std::sin(th);
      u = u * g;
    }
  }
  return u;
}

MeasuredEnsemble measure_ensemble(const BipartiteState& s, const MeasurementSetting& m,
                                  Subsystem side) {
  const int dm = s.dim_of(side);
  if (m.dim() != dm) {
    throw StructuralError("measure_ensemble: setting dim " + std::to_string(m.dim()) +
                          " != measured side dim " + std::to_string(dm));
  }
  const int d_other = side == Subsystem::A ? s.dim_b() : s.dim_a();
  const Matrix eye_other = Matrix::Identity(d_other, d_other);

  MeasuredEnsemble e{{}, side, 0};
  for (int i = 0; i < dm; ++i) {
    // <u_i| rho |u_i> contracted on the measured side.
    const Matrix embed = side == Subsystem::A
                             ? kron(Matrix(m.rotation().col(i)), eye_other)
                             : kron(eye_other, Matrix(m.rotation().col(i)));
    Matrix cond = embed.adjoint() * s.matrix() * embed;
    const double p = cond.trace().real();
    if (p <= 1e-14) {
      ++e.omitted_outcomes;
      continue;
    }
    e.outcomes.push_back({p, DensityMatrix(symmetrize(cond / p))});
  }
  return e;
}

namespace {

// Entropy-difference form only; S(rho_bar) is the unmeasured marginal's
// entropy, constant over measurement settings.
double holevo_diff(const MeasuredEnsemble& e, double avg_entropy) {
  double cond = 0.0;
  for (const auto& o : e.outcomes) cond += o.probability * von_neumann_entropy(o.post_state);
  const double h = avg_entropy - cond;
  return h < 0.0 ? 0.0 : h;
}

DensityMatrix ensemble_average(const MeasuredEnsemble& e) {
  const int d = e.outcomes.front().post_state.dim();
  Matrix avg = Matrix::Zero(d, d);
  double ptot = 0.0;
  for (const auto& o : e.outcomes) {
    avg += o.probability * o.post_state.matrix();
    ptot += o.probability;
  }
  return DensityMatrix(symmetrize(avg / ptot));
}

}  // namespace

double holevo_value(const MeasuredEnsemble& e, double xcheck_tol) {
  if (e.outcomes.empty()) throw StructuralError("holevo_value: empty ensemble");
  const DensityMatrix avg = ensemble_average(e);
  const double diff_form = holevo_diff(e, von_neumann_entropy(avg));

  double relent_form = 0.0;
  for (const auto& o : e.outcomes) {
    relent_form += o.probability * relative_entropy(o.post_state, avg);
  }
  if (std::abs(diff_form - relent_form) > xcheck_tol) {
    throw NumericalConsistencyError("holevo_value: the two forms disagree: " +
                                    std::to_string(diff_form) + " vs " +
                                    std::to_string(relent_form));
  }
  return diff_form;
}

CorrelationResult classical_correlation(const BipartiteState& s, Subsystem side,
                                        const OptimizerConfig& cfg) {
  const int dm = s.dim_of(side);
  const int n = angle_count(dm);
  const Subsystem other = side == Subsystem::A ? Subsystem::B : Subsystem::A;
  const double avg_entropy = von_neumann_entropy(partial_trace(s, other));

  const auto objective = [&](const Eigen::VectorXd& angles) {
    const MeasurementSetting m(unitary_from_angles(dm, angles));
    return -holevo_diff(measure_ensemble(s, m, side), avg_entropy);
  };

  NelderMeadOptions nm;
  nm.max_iters = cfg.max_iters;
  nm.ftol = cfg.ftol;

  double best = std::numeric_limits<double>::infinity();
  double worst = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_angles = Eigen::VectorXd::Zero(n);

  for (int r = 0; r < cfg.restarts; ++r) {
    Eigen::VectorXd x0(n);
    if (r == 0) {
      x0.setZero();  // computational basis; exact for classical-quantum states
    } else {
      std::mt19937_64 rng(cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r));
      std::uniform_real_distribution<double> uni(0.0, M_PI);
      for (int i = 0; i < n; ++i) x0(i) = uni(rng);
    }
    const auto res = nelder_mead(objective, x0, nm);
    if (res.f < best) {
      best = res.f;
      best_angles = res.x;
    }
    if (res.f > worst) worst = res.f;
  }

  CorrelationResult out{-best, MeasurementSetting(unitary_from_angles(dm, best_angles)),
                        cfg.restarts, -best - (-worst), cfg.measurement_class};
  if (out.value < 0.0) out.value = 0.0;
  return out;
}

DiscordResult quantum_discord(const BipartiteState& s, Subsystem side,
                              const OptimizerConfig& cfg, double clamp_tol) {
  const double mi = mutual_information(s);
  CorrelationResult corr = classical_correlation(s, side, cfg);
  double d = mi - corr.value;
  if (d < -clamp_tol) {
    throw NumericalConsistencyError(
        "quantum_discord: C exceeds I by " + std::to_string(-d) +
        "; the classical correlation optimizer is misconfigured");
  }
  if (d < 0.0) d = 0.0;
  return DiscordResult{d, mi, std::move(corr)};
}

BipartiteState classical_quantum_state(const std::vector<double>& probs,
                                       const Matrix& basis,
                                       const std::vector<DensityMatrix>& states) {
  const int da = static_cast<int>(basis.rows());
  if (basis.cols() != da) throw StructuralError("classical_quantum_state: basis must be square");
  if (static_cast<int>(probs.size()) != da || static_cast<int>(states.size()) != da) {
    throw StructuralError("classical_quantum_state: need one probability and one state per basis vector");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw ValidationError("classical_quantum_state: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw ValidationError("classical_quantum_state: probabilities sum to " + std::to_string(sum));
  }
  const int db = states.front().dim();
  Matrix m = Matrix::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    m += probs[i] * kron(Matrix(basis.col(i) * basis.col(i).adjoint()), states[i].matrix());
  }
  return BipartiteState(DensityMatrix(symmetrize(m)), da, db);
}

}  // namespace qcorr
