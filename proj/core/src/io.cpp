#include "qcorr/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qcorr {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw StructuralError("complex entries must be [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Matrix named_unitary(const std::string& name) {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  if (name == "hadamard") {
    m << s, s, s, -s;
  } else if (name == "x") {
    m << 0, 1, 1, 0;
  } else if (name == "y") {
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  } else if (name == "z") {
    m << 1, 0, 0, -1;
  } else {
    throw StructuralError("unknown named unitary: " + name);
  }
  return m;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw StructuralError("matrix must be a nonempty array of rows");
  const auto rows = j.size();
  const auto cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw StructuralError("matrix rows have unequal lengths");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw StructuralError("vector must be an array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

Json state_to_json(const BipartiteState& s) {
  return Json{{"dim_a", s.dim_a()}, {"dim_b", s.dim_b()}, {"matrix", matrix_to_json(s.matrix())}};
}

BipartiteState state_from_json(const Json& j) {
  const int dim_a = j.at("dim_a").get<int>();
  const int dim_b = j.at("dim_b").get<int>();
  if (j.contains("amplitudes")) {
    return BipartiteState(pure_to_density(PureState(vector_from_json(j.at("amplitudes")))),
                          dim_a, dim_b);
  }
  return BipartiteState(DensityMatrix(matrix_from_json(j.at("matrix"))), dim_a, dim_b);
}

Json channel_to_json(const KrausChannel& ch) {
  Json kraus = Json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
  return Json{{"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}, {"kraus", std::move(kraus)}};
}

namespace {

IsotropicGamma gamma_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "transpose") return GammaTranspose{};
  if (j.is_object() && j.contains("unitary")) {
    return GammaUnitary{matrix_from_json(j.at("unitary"))};
  }
  throw StructuralError("gamma must be \"transpose\" or {\"unitary\": matrix}");
}

KrausChannel zoo_from_json(const Json& j) {
  const std::string zoo = j.at("zoo").get<std::string>();
  if (zoo == "identity") return identity_channel(j.at("d").get<int>());
  if (zoo == "unitary") {
    if (j.contains("name")) return unitary_channel(named_unitary(j.at("name").get<std::string>()));
    return unitary_channel(matrix_from_json(j.at("matrix")));
  }
  if (zoo == "depolarizing") return depolarizing(j.at("p").get<double>(), j.at("d").get<int>());
  if (zoo == "decohere" || zoo == "completely_decohering") {
    if (j.contains("basis")) return completely_decohering(matrix_from_json(j.at("basis")));
    const int d = j.at("d").get<int>();
    return completely_decohering(Matrix::Identity(d, d));
  }
  if (zoo == "isotropic") {
    const IsotropicGamma gamma = j.contains("gamma")
                                     ? gamma_from_json(j.at("gamma"))
                                     : IsotropicGamma{GammaUnitary{Matrix::Identity(
                                           j.at("d").get<int>(), j.at("d").get<int>())}};
    return isotropic(j.at("p").get<double>(), gamma, j.at("d").get<int>());
  }
  if (zoo == "measure_prepare") {
    const Matrix basis = matrix_from_json(j.at("basis"));
    std::vector<DensityMatrix> prepared;
    for (const auto& m : j.at("states")) prepared.emplace_back(matrix_from_json(m));
    return measure_and_prepare(basis, prepared);
  }
  throw StructuralError("unknown zoo channel: " + zoo);
}

}  // namespace

KrausChannel channel_from_json(const Json& j) {
  if (j.contains("zoo")) return zoo_from_json(j);
  std::vector<Matrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  const KrausChannel ch(std::move(kraus));
  if (j.contains("dim_in") && j.at("dim_in").get<int>() != ch.dim_in()) {
    throw StructuralError("channel dim_in does not match Kraus operator shape");
  }
  if (j.contains("dim_out") && j.at("dim_out").get<int>() != ch.dim_out()) {
    throw StructuralError("channel dim_out does not match Kraus operator shape");
  }
  return ch;
}

KrausChannel channel_from_zoo_spec(const std::string& spec) {
  std::string body = spec;
  if (body.rfind("zoo:", 0) == 0) body = body.substr(4);

  Json j;
  std::stringstream ss(body);
  std::string item;
  bool first = true;
  while (std::getline(ss, item, ',')) {
    if (first) {
      j["zoo"] = item;
      first = false;
      continue;
    }
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw StructuralError("zoo spec entries must be key=value: " + item);
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "p") {
      j["p"] = std::stod(val);
    } else if (key == "d") {
      j["d"] = std::stoi(val);
    } else if (key == "name") {
      j["name"] = val;
    } else if (key == "gamma" && val == "transpose") {
      j["gamma"] = "transpose";
    } else {
      throw StructuralError("unknown zoo spec key: " + key);
    }
  }
  if (!j.contains("zoo")) throw StructuralError("empty zoo spec");
  return zoo_from_json(j);
}

Json optimizer_config_to_json(const OptimizerConfig& cfg) {
  return Json{{"restarts", cfg.restarts},
              {"seed", cfg.seed},
              {"max_iters", cfg.max_iters},
              {"ftol", cfg.ftol},
              {"measurement_class", cfg.measurement_class}};
}

OptimizerConfig optimizer_config_from_json(const Json& j) {
  OptimizerConfig cfg;
  if (j.contains("restarts")) cfg.restarts = j.at("restarts").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("max_iters")) cfg.max_iters = j.at("max_iters").get<int>();
  if (j.contains("ftol")) cfg.ftol = j.at("ftol").get<double>();
  if (j.contains("measurement_class")) {
    cfg.measurement_class = j.at("measurement_class").get<std::string>();
  }
  return cfg;
}

Json discord_result_to_json(const DiscordResult& r, const OptimizerConfig& cfg) {
  return Json{{"I", r.mutual_info},
              {"C", r.correlation.value},
              {"D", r.discord},
              {"best_measurement", matrix_to_json(r.correlation.best_measurement.rotation())},
              {"spread", r.correlation.spread},
              {"restarts_used", r.correlation.restarts_used},
              {"measurement_class", r.correlation.measurement_class},
              {"config", optimizer_config_to_json(cfg)}};
}

namespace {

Json triple_to_json(const QuantityTriple& t) {
  return Json{{"I", t.mutual_info}, {"C", t.classical_corr}, {"D", t.discord}};
}

}  // namespace

Json invariance_report_to_json(const InvarianceReport& r) {
  return Json{{"state_spec", r.state_spec},
              {"channel_spec", r.channel_spec},
              {"before", triple_to_json(r.before)},
              {"after", triple_to_json(r.after)},
              {"delta", triple_to_json(r.delta)},
              {"reversible_a", r.reversible_a},
              {"reversible_b", r.reversible_b},
              {"verdict",
               {{"I", verdict_name(r.verdict_mutual_info)},
                {"C", verdict_name(r.verdict_classical_corr)},
                {"D", verdict_name(r.verdict_discord)}}},
              {"tolerances", {{"I", r.tol_mutual_info}, {"C_D", r.tol_discord}}},
              {"seed", r.seed}};
}

Json suite_summary_to_json(const SuiteSummary& s) {
  Json subs = Json::array();
  for (const auto& sub : s.subsuites) {
    subs.push_back(Json{{"subsuite", sub.name},
                        {"pass", sub.pass},
                        {"fail", sub.fail},
                        {"worst_delta", sub.worst_delta}});
  }
  return Json{{"seed", s.seed}, {"trials", s.trials}, {"subsuites", std::move(subs)},
              {"all_pass", s.all_pass}};
}

Json sufficiency_report_to_json(const SufficiencyReport& r) {
  return Json{{"s_before", r.s_before},
              {"s_after", r.s_after},
              {"gap", r.gap},
              {"recovery_error_rho", r.recovery_error_rho},
              {"recovery_error_sigma", r.recovery_error_sigma},
              {"rho_recovered", r.rho_recovered},
              {"sigma_recovered", r.sigma_recovered}};
}

Json channel_verdict_to_json(const ChannelVerdict& v) {
  Json probe{{"preserves", v.commutativity.preserves},
             {"trials", v.commutativity.trials},
             {"tol", v.commutativity.tol}};
  if (v.commutativity.witness) {
    probe["witness"] = Json{{"rho", matrix_to_json(v.commutativity.witness->rho)},
                            {"sigma", matrix_to_json(v.commutativity.witness->sigma)},
                            {"commutator_norm", v.commutativity.witness->commutator_norm}};
  }
  return Json{{"cptp_valid", v.cptp_valid},
              {"unital", v.unital},
              {"linear_rank", v.linear_rank},
              {"reversible_cptp", v.reversible_cptp},
              {"commutativity", std::move(probe)}};
}

std::string suite_summary_to_csv(const SuiteSummary& s) {
  std::ostringstream out;
  out << "subsuite,pass,fail,worst_delta\n";
  for (const auto& sub : s.subsuites) {
    out << sub.name << "," << sub.pass << "," << sub.fail << "," << sub.worst_delta << "\n";
  }
  return out.str();
}

BipartiteState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file: " + path);
  return state_from_json(Json::parse(in));
}

KrausChannel load_channel(const std::string& path_or_zoo) {
  if (path_or_zoo.rfind("zoo:", 0) == 0) return channel_from_zoo_spec(path_or_zoo);
  std::ifstream in(path_or_zoo);
  if (!in) throw IoError("cannot open channel file: " + path_or_zoo);
  return channel_from_json(Json::parse(in));
}

void save_state(const std::string& path, const BipartiteState& s) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot open output file: " + path);
  out << state_to_json(s).dump(2) << "\n";
}

}  // namespace qcorr
