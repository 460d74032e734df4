#include "qcorr/harness.hpp"

#include <cmath>

namespace qcorr {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Invariant: return "invariant";
    case Verdict::Decreased: return "decreased";
    case Verdict::Increased: return "increased";
  }
  return "?";
}

namespace {

Verdict judge(double delta, double tol) {
  if (std::abs(delta) <= tol) return Verdict::Invariant;
  return delta < 0.0 ? Verdict::Decreased : Verdict::Increased;
}

QuantityTriple measure_quantities(const BipartiteState& s, const HarnessConfig& cfg) {
  const DiscordResult d = quantum_discord(s, cfg.side, cfg.optimizer);
  return {d.mutual_info, d.correlation.value, d.discord};
}

}  // namespace

KrausChannel product_channel(const LocalChannelPair& pair) {
  std::vector<Matrix> kraus;
  for (const auto& a : pair.channel_a.kraus())
    for (const auto& b : pair.channel_b.kraus()) kraus.push_back(kron(a, b));
  return KrausChannel(std::move(kraus));
}

InvarianceReport run_invariance_experiment(const BipartiteState& s,
                                           const LocalChannelPair& pair,
                                           const HarnessConfig& cfg,
                                           const std::string& state_spec,
                                           const std::string& channel_spec) {
  InvarianceReport r{};
  r.state_spec = state_spec;
  r.channel_spec = channel_spec;
  r.seed = cfg.seed;
  r.tol_mutual_info = cfg.tol_mutual_info;
  r.tol_discord = cfg.tol_discord;

  r.before = measure_quantities(s, cfg);
  r.after = measure_quantities(apply_local(pair, s), cfg);
  r.delta = {r.after.mutual_info - r.before.mutual_info,
             r.after.classical_corr - r.before.classical_corr,
             r.after.discord - r.before.discord};

  r.reversible_a = is_reversible_cptp(pair.channel_a);
  r.reversible_b = is_reversible_cptp(pair.channel_b);

  r.verdict_mutual_info = judge(r.delta.mutual_info, cfg.tol_mutual_info);
  r.verdict_classical_corr = judge(r.delta.classical_corr, cfg.tol_discord);
  r.verdict_discord = judge(r.delta.discord, cfg.tol_discord);
  return r;
}

InvarianceReport bell_isotropic_demo(double p, const HarnessConfig& cfg) {
  if (p < 0.0 || p > 1.0) throw StructuralError("bell_isotropic_demo: p out of [0,1]");
  const BipartiteState bell = bell_state();
  const LocalChannelPair pair{identity_channel(2),
                              isotropic(p, GammaUnitary{Matrix::Identity(2, 2)}, 2)};

  // The post state must be the Werner-form mixture.
  const BipartiteState post = apply_local(pair, bell);
  const Matrix werner = p * bell.matrix() + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
  const double dev = (post.matrix() - werner).cwiseAbs().maxCoeff();
  if (dev > 1e-12) {
    throw NumericalConsistencyError(
        "bell_isotropic_demo: post state deviates from the Werner form by " +
        std::to_string(dev));
  }

  return run_invariance_experiment(bell, pair, cfg, "bell",
                                   "id (x) isotropic(p=" + std::to_string(p) + ")");
}

MutualInfoInvarianceReport mutual_info_invariance_check(const BipartiteState& s, const LocalChannelPair& pair,
                          double recovery_tol) {
  const DensityMatrix rho_a = partial_trace(s, Subsystem::A);
  const DensityMatrix rho_b = partial_trace(s, Subsystem::B);
  const BipartiteState product = tensor(rho_a, rho_b);

  const BipartiteState s_after = apply_local(pair, s);

  MutualInfoInvarianceReport r{};
  r.i_before = mutual_information(s);
  r.i_after = mutual_information(s_after);
  r.delta = r.i_after - r.i_before;

  const KrausChannel flat = product_channel(pair);
  const KrausChannel petz = petz_map(flat, product.state());
  r.recovery_error_joint = trace_distance(apply(petz, s_after.state()), s.state());
  r.recovery_error_product =
      trace_distance(apply(petz, apply(flat, product.state())), product.state());
  r.joint_recovered = r.recovery_error_joint <= recovery_tol;
  r.product_recovered = r.recovery_error_product <= recovery_tol;
  return r;
}

namespace {

struct SubSuiteBuilder {
  SubSuiteResult result;

  explicit SubSuiteBuilder(std::string name) : result{std::move(name), 0, 0, 0.0} {}

  void record(bool pass, double delta) {
    pass ? ++result.pass : ++result.fail;
    if (std::abs(delta) > std::abs(result.worst_delta)) result.worst_delta = delta;
  }
};

}  // namespace

SuiteSummary invariance_suite(std::uint64_t seed, int trials, const HarnessConfig& cfg) {
  if (trials < 1) throw StructuralError("invariance_suite: trials must be >= 1");
  SuiteSummary summary{seed, trials, {}, true};

  HarnessConfig per_trial = cfg;

  // (a) local unitary pairs leave D invariant
  {
    SubSuiteBuilder b("local_unitary_invariance");
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
      const BipartiteState s(random_density(4, 4, rng), 2, 2);
      const LocalChannelPair pair{unitary_channel(random_unitary(2, rng)),
                                  unitary_channel(random_unitary(2, rng))};
      per_trial.seed = seed + static_cast<std::uint64_t>(t);
      per_trial.optimizer.seed = per_trial.seed;
      const auto rep = run_invariance_experiment(s, pair, per_trial);
      b.record(std::abs(rep.delta.discord) <= cfg.tol_discord, rep.delta.discord);
    }
    summary.subsuites.push_back(b.result);
  }

  // (b) completely decohering channel on the measured side nullifies D
  {
    SubSuiteBuilder b("decohering_nullification");
    const KrausChannel decohere = completely_decohering(Matrix::Identity(2, 2));
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(seed + 1000 + static_cast<std::uint64_t>(t));
      const BipartiteState s(random_density(4, 4, rng), 2, 2);
      const LocalChannelPair pair =
          cfg.side == Subsystem::A ? LocalChannelPair{decohere, identity_channel(2)}
                                   : LocalChannelPair{identity_channel(2), decohere};
      per_trial.seed = seed + 1000 + static_cast<std::uint64_t>(t);
      per_trial.optimizer.seed = per_trial.seed;
      const auto after =
          quantum_discord(apply_local(pair, s), cfg.side, per_trial.optimizer);
      b.record(after.discord <= cfg.tol_discord, after.discord);
    }
    summary.subsuites.push_back(b.result);
  }

  // (c) isotropic channel strictly lowers the Bell state's discord for p < 1
  {
    SubSuiteBuilder b("isotropic_decrease");
    per_trial.seed = seed;
    per_trial.optimizer.seed = seed;
    for (double p : {0.0, 0.25, 0.5, 0.75}) {
      const auto rep = bell_isotropic_demo(p, per_trial);
      b.record(rep.delta.discord < -cfg.tol_discord, rep.delta.discord);
    }
    summary.subsuites.push_back(b.result);
  }

  // (d) commutativity probes across the zoo
  {
    SubSuiteBuilder b("commutativity_probes");
    std::mt19937_64 rng(seed + 2000);
    const int probe_trials = std::max(trials, 50);
    const struct {
      KrausChannel ch;
      bool expect_preserves;
    } cases[] = {
        {unitary_channel(random_unitary(2, rng)), true},
        {completely_decohering(Matrix::Identity(2, 2)), true},
        {depolarizing(0.5, 2), true},
        {isotropic(0.5, GammaUnitary{random_unitary(2, rng)}, 2), true},
        {random_channel(2, 2, rng), false},
    };
    for (const auto& c : cases) {
      const auto verdict = preserves_commutativity_probe(c.ch, probe_trials, seed + 2001);
      const bool ok = verdict.preserves == c.expect_preserves;
      b.record(ok, verdict.witness ? verdict.witness->commutator_norm : 0.0);
    }
    summary.subsuites.push_back(b.result);
  }

  // (e) mutual-information invariance for unitary pairs, strict decrease
  //     for depolarizing on generic correlated states
  {
    SubSuiteBuilder b("mutual_info_invariance");
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(seed + 3000 + static_cast<std::uint64_t>(t));
      const BipartiteState s(random_density(4, 4, rng), 2, 2);
      const LocalChannelPair unitaries{unitary_channel(random_unitary(2, rng)),
                                       unitary_channel(random_unitary(2, rng))};
      const auto rev = mutual_info_invariance_check(s, unitaries, 1e-9);
      const bool rev_ok =
          std::abs(rev.delta) <= cfg.tol_mutual_info && rev.joint_recovered && rev.product_recovered;

      const LocalChannelPair noisy{depolarizing(0.5, 2), identity_channel(2)};
      const auto irr = mutual_info_invariance_check(s, noisy);
      const bool irr_ok = irr.delta < -1e-6 && !irr.joint_recovered;

      b.record(rev_ok && irr_ok, rev.delta);
    }
    summary.subsuites.push_back(b.result);
  }

  // (f) classical correlation cannot increase under local channels
  {
    SubSuiteBuilder b("classical_corr_monotonicity");
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(seed + 4000 + static_cast<std::uint64_t>(t));
      const BipartiteState s(random_density(4, 4, rng), 2, 2);
      std::uniform_int_distribution<int> pick(0, 3);
      auto pick_channel = [&]() -> KrausChannel {
        switch (pick(rng)) {
          case 0: return unitary_channel(random_unitary(2, rng));
          case 1: return depolarizing(0.25 + 0.5 * (pick(rng) / 3.0), 2);
          case 2: return completely_decohering(random_unitary(2, rng));
          default: return isotropic(0.5, GammaUnitary{random_unitary(2, rng)}, 2);
        }
      };
      const LocalChannelPair pair{pick_channel(), pick_channel()};
      per_trial.optimizer.seed = seed + 4000 + static_cast<std::uint64_t>(t);
      const double c_before = classical_correlation(s, cfg.side, per_trial.optimizer).value;
      const double c_after =
          classical_correlation(apply_local(pair, s), cfg.side, per_trial.optimizer).value;
      b.record(c_after <= c_before + 2e-3, c_after - c_before);
    }
    summary.subsuites.push_back(b.result);
  }

  for (const auto& sub : summary.subsuites) {
    if (sub.fail > 0) summary.all_pass = false;
  }
  return summary;
}

}  // namespace qcorr
