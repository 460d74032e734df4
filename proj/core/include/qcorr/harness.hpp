#pragma once

#include <string>
#include <vector>

#include "qcorr/channel.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/recovery.hpp"

namespace qcorr {

struct HarnessConfig {
  OptimizerConfig optimizer{};
  std::uint64_t seed = 0;
  Subsystem side = Subsystem::A;  // measured side for C and D
  double tol_mutual_info = 1e-9;  // invariance threshold for I (closed form)
  double tol_discord = 1e-3;      // invariance threshold for C and D (optimizer-limited)
};

enum class Verdict { Invariant, Decreased, Increased };

const char* verdict_name(Verdict v);

struct QuantityTriple {
  double mutual_info;
  double classical_corr;
  double discord;
};

struct InvarianceReport {
  std::string state_spec;
  std::string channel_spec;
  QuantityTriple before;
  QuantityTriple after;
  QuantityTriple delta;  // after - before
  bool reversible_a;
  bool reversible_b;
  Verdict verdict_mutual_info;
  Verdict verdict_classical_corr;
  Verdict verdict_discord;
  double tol_mutual_info;
  double tol_discord;
  std::uint64_t seed;
};

/// I, C_A, D_A before and after the local channel pair, with per-channel
/// reversibility flags and per-quantity verdicts.
InvarianceReport run_invariance_experiment(const BipartiteState& s,
                                           const LocalChannelPair& pair,
                                           const HarnessConfig& cfg = {},
                                           const std::string& state_spec = "state",
                                           const std::string& channel_spec = "channel-pair");

/// (id (x) isotropic(p, Gamma = identity)) on the Bell state. The post state
/// is checked against the Werner form p |psi><psi| + (1-p) I/4.
InvarianceReport bell_isotropic_demo(double p, const HarnessConfig& cfg = {});

struct MutualInfoInvarianceReport {
  double i_before;
  double i_after;
  double delta;  // i_after - i_before
  double recovery_error_joint;    // trace distance for rho_AB
  double recovery_error_product;  // trace distance for rho_A (x) rho_B
  bool joint_recovered;
  bool product_recovered;
};

/// Mutual-information invariance under the pair plus Petz recovery of both
/// the joint state and the product of marginals, reference rho_A (x) rho_B.
MutualInfoInvarianceReport mutual_info_invariance_check(const BipartiteState& s, const LocalChannelPair& pair,
                          double recovery_tol = 1e-6);

struct SubSuiteResult {
  std::string name;
  int pass;
  int fail;
  double worst_delta;
};

struct SuiteSummary {
  std::uint64_t seed;
  int trials;
  std::vector<SubSuiteResult> subsuites;
  bool all_pass;
};

/// Randomized experiment battery: (a) local-unitary invariance of D,
/// (b) decohering nullification, (c) isotropic decrease on the Bell state,
/// (d) commutativity probes on the zoo, (e) mutual-information invariance and
/// strict-decrease spot checks, (f) classical-correlation monotonicity.
SuiteSummary invariance_suite(std::uint64_t seed, int trials, const HarnessConfig& cfg = {});

/// Flattens the pair into one Kraus channel {A_i (x) B_j}.
KrausChannel product_channel(const LocalChannelPair& pair);

}  // namespace qcorr
