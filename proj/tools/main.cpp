// qcorr: correlation measures, channels and invariance experiments for
// bipartite quantum states.
//
// Exit codes: 0 success, 1 suite failure, 2 usage/parse error,
// 3 domain-validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcorr/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct CommonOpts {
  std::string state_path;
  std::string channel_a;
  std::string channel_b;
  std::string side = "A";
  std::optional<std::uint64_t> seed;
  int restarts = 32;
  int trials = 50;
  double tol = 1e-3;
  std::string out_path;
  std::string format = "json";
};

std::uint64_t effective_seed(const CommonOpts& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("QCORR_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

qcorr::Subsystem parse_side(const std::string& s) {
  if (s == "A" || s == "a") return qcorr::Subsystem::A;
  if (s == "B" || s == "b") return qcorr::Subsystem::B;
  throw CLI::ValidationError("--side must be A or B");
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(o.out_path);
    if (!out) throw qcorr::StructuralError("cannot open output file: " + o.out_path);
    out << text << "\n";
  }
}

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--side", o.side, "Measured side, A or B");
  cmd->add_option("--seed", o.seed, "RNG seed (QCORR_SEED env is the fallback)");
  cmd->add_option("--restarts", o.restarts, "Optimizer restarts");
  cmd->add_option("--trials", o.trials, "Randomized trials");
  cmd->add_option("--tol", o.tol, "Invariance tolerance for C and D");
  cmd->add_option("--out", o.out_path, "Output path (stdout when absent)");
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

qcorr::OptimizerConfig optimizer_from(const CommonOpts& o) {
  qcorr::OptimizerConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = effective_seed(o);
  return cfg;
}

qcorr::HarnessConfig harness_from(const CommonOpts& o) {
  qcorr::HarnessConfig cfg;
  cfg.optimizer = optimizer_from(o);
  cfg.seed = effective_seed(o);
  cfg.side = parse_side(o.side);
  cfg.tol_discord = o.tol;
  return cfg;
}

int run_discord(const CommonOpts& o, bool mutinfo_only) {
  const qcorr::BipartiteState s = qcorr::load_state(o.state_path);
  if (mutinfo_only) {
    qcorr::Json out{{"I", qcorr::mutual_information(s)},
                    {"seed", effective_seed(o)}};
    emit(o, out.dump(2));
    return kExitOk;
  }
  const auto cfg = optimizer_from(o);
  const auto result = qcorr::quantum_discord(s, parse_side(o.side), cfg);
  emit(o, qcorr::discord_result_to_json(result, cfg).dump(2));
  return kExitOk;
}

int run_channel(const CommonOpts& o, const std::string& action) {
  const qcorr::KrausChannel ch = qcorr::load_channel(o.channel_a);
  if (action == "validate") {
    qcorr::Json out{{"dim_in", ch.dim_in()},
                    {"dim_out", ch.dim_out()},
                    {"kraus_count", ch.kraus().size()},
                    {"cptp_valid", true}};  // construction already validated
    emit(o, out.dump(2));
    return kExitOk;
  }
  if (action == "classify") {
    const auto verdict = qcorr::classify(ch, o.trials, effective_seed(o));
    qcorr::Json out = qcorr::channel_verdict_to_json(verdict);
    out["seed"] = effective_seed(o);
    emit(o, out.dump(2));
    return kExitOk;
  }
  // apply
  const qcorr::BipartiteState s = qcorr::load_state(o.state_path);
  const qcorr::KrausChannel chb = o.channel_b.empty()
                                      ? qcorr::identity_channel(s.dim_b())
                                      : qcorr::load_channel(o.channel_b);
  const auto after = qcorr::apply_local({ch, chb}, s);
  emit(o, qcorr::state_to_json(after).dump(2));
  return kExitOk;
}

int run_invariance(const CommonOpts& o, const std::string& demo, double p) {
  const auto cfg = harness_from(o);
  qcorr::InvarianceReport report = [&] {
    if (!demo.empty()) {
      if (demo != "bell-isotropic") throw CLI::ValidationError("unknown --demo: " + demo);
      return qcorr::bell_isotropic_demo(p, cfg);
    }
    const qcorr::BipartiteState s = qcorr::load_state(o.state_path);
    const qcorr::LocalChannelPair pair{qcorr::load_channel(o.channel_a),
                                       qcorr::load_channel(o.channel_b)};
    return qcorr::run_invariance_experiment(s, pair, cfg, o.state_path,
                                            o.channel_a + " (x) " + o.channel_b);
  }();
  qcorr::Json out = qcorr::invariance_report_to_json(report);
  out["config"] = qcorr::optimizer_config_to_json(cfg.optimizer);
  emit(o, out.dump(2));
  return kExitOk;
}

int run_suite(const CommonOpts& o) {
  if (o.trials < 1) {
    std::cerr << "qcorr suite: --trials must be >= 1\n";
    return kExitUsage;
  }
  const auto cfg = harness_from(o);
  const auto summary = qcorr::invariance_suite(effective_seed(o), o.trials, cfg);
  if (o.format == "csv") {
    emit(o, qcorr::suite_summary_to_csv(summary));
  } else {
    qcorr::Json out = qcorr::suite_summary_to_json(summary);
    out["config"] = qcorr::optimizer_config_to_json(cfg.optimizer);
    emit(o, out.dump(2));
  }
  return summary.all_pass ? kExitOk : kExitSuiteFailure;
}

int run_petz(const CommonOpts& o, const std::string& sigma_path) {
  const qcorr::KrausChannel ch = qcorr::load_channel(o.channel_a);
  const qcorr::DensityMatrix rho = qcorr::load_state(o.state_path).state();
  const qcorr::DensityMatrix sigma = qcorr::load_state(sigma_path).state();
  const auto report = qcorr::check_sufficiency(ch, rho, sigma);
  qcorr::Json out = qcorr::sufficiency_report_to_json(report);
  out["seed"] = effective_seed(o);
  emit(o, out.dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlation measures and local-channel invariance experiments"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string channel_action = "classify";
  std::string demo;
  double demo_p = 0.5;
  std::string sigma_path;

  auto* discord = app.add_subcommand("discord", "Quantum discord of a state");
  discord->add_option("--state", o.state_path, "State file (JSON)")->required();
  add_common(discord, o);

  auto* mutinfo = app.add_subcommand("mutinfo", "Quantum mutual information");
  mutinfo->add_option("--state", o.state_path, "State file (JSON)")->required();
  add_common(mutinfo, o);

  auto* channel = app.add_subcommand("channel", "Validate, classify or apply a channel");
  channel->add_option("action", channel_action, "validate | classify | apply")
      ->check(CLI::IsMember({"validate", "classify", "apply"}));
  channel->add_option("--channel-a", o.channel_a, "Channel file or zoo spec")->required();
  channel->add_option("--channel-b", o.channel_b, "Second channel for apply");
  channel->add_option("--state", o.state_path, "State file, for apply");
  add_common(channel, o);

  auto* invariance = app.add_subcommand("invariance", "Before/after invariance experiment");
  invariance->add_option("--state", o.state_path, "State file");
  invariance->add_option("--channel-a", o.channel_a, "Local channel on A");
  invariance->add_option("--channel-b", o.channel_b, "Local channel on B");
  invariance->add_option("--demo", demo, "Named demo: bell-isotropic");
  invariance->add_option("--p", demo_p, "Demo parameter p");
  add_common(invariance, o);

  auto* suite = app.add_subcommand("suite", "Randomized invariance suite");
  add_common(suite, o);

  auto* petz = app.add_subcommand("petz", "Petz recovery / relative-entropy sufficiency");
  petz->add_option("--channel-a", o.channel_a, "Channel file or zoo spec")->required();
  petz->add_option("--state", o.state_path, "rho state file")->required();
  petz->add_option("--sigma", sigma_path, "sigma state file")->required();
  add_common(petz, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (discord->parsed()) return run_discord(o, false);
    if (mutinfo->parsed()) return run_discord(o, true);
    if (channel->parsed()) return run_channel(o, channel_action);
    if (invariance->parsed()) return run_invariance(o, demo, demo_p);
    if (suite->parsed()) return run_suite(o);
    if (petz->parsed()) return run_petz(o, sigma_path);
  } catch (const qcorr::Json::parse_error& e) {
    std::cerr << "qcorr: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qcorr::IoError& e) {
    std::cerr << "qcorr: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qcorr::ValidationError& e) {
    std::cerr << "qcorr: validation error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const qcorr::StructuralError& e) {
    std::cerr << "qcorr: " << e.what() << "\n";
    return kExitDomain;
  } catch (const qcorr::UnsupportedInstanceError& e) {
    std::cerr << "qcorr: " << e.what() << "\n";
    return kExitDomain;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "qcorr: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcorr: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
