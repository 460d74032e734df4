#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qcorr/io.hpp"

using namespace qcorr;

namespace {

std::string cli_path() { return QCORR_CLI_PATH; }

struct CommandResult {
  int exit_code;
  std::string stdout_text;
};

CommandResult run_cli(const std::string& args) {
  const std::string out_file = std::string(std::tmpnam(nullptr)) + ".out";
  const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_file.c_str());
  return {WEXITSTATUS(status), ss.str()};
}

std::string write_temp(const std::string& content) {
  const std::string path = std::string(std::tmpnam(nullptr)) + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

std::string bell_file() {
  return write_temp(state_to_json(bell_state()).dump());
}

}  // namespace

TEST_CASE("state JSON round trip preserves entries") {
  const BipartiteState s(random_density(6, 4, 1), 2, 3);
  const auto j = state_to_json(s);
  const auto back = state_from_json(j);
  CHECK(back.dim_a() == 2);
  CHECK(back.dim_b() == 3);
  CHECK((back.matrix() - s.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pure-state JSON form loads through amplitudes") {
  Json j{{"dim_a", 2},
         {"dim_b", 2},
         {"amplitudes", Json::array({Json::array({M_SQRT1_2, 0}), Json::array({0, 0}),
                                     Json::array({0, 0}), Json::array({M_SQRT1_2, 0})})}};
  const auto s = state_from_json(j);
  CHECK((s.matrix() - bell_state().matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("channel JSON round trip and zoo specs") {
  const auto ch = depolarizing(0.5, 2);
  const auto back = channel_from_json(channel_to_json(ch));
  CHECK((superoperator_matrix(back) - superoperator_matrix(ch)).cwiseAbs().maxCoeff() < 1e-12);

  const auto iso = channel_from_json(
      Json{{"zoo", "isotropic"}, {"p", 0.5}, {"gamma", Json{{"unitary", matrix_to_json(Matrix::Identity(2, 2))}}}, {"d", 2}});
  CHECK(iso.dim_in() == 2);

  const auto dep = channel_from_zoo_spec("zoo:depolarizing,p=0.25,d=3");
  CHECK(dep.dim_in() == 3);
  CHECK_THROWS_AS(channel_from_zoo_spec("zoo:nonsense,d=2"), StructuralError);
}

TEST_CASE("cli discord on the Bell state reports D near 1") {
  const auto r = run_cli("discord --state " + bell_file() + " --restarts 8 --seed 1");
  REQUIRE(r.exit_code == 0);
  const auto j = Json::parse(r.stdout_text);
  CHECK(std::abs(j.at("D").get<double>() - 1.0) < 1e-3);
  CHECK(std::abs(j.at("I").get<double>() - 2.0) < 1e-9);
  CHECK(j.at("config").at("seed").get<std::uint64_t>() == 1);
}

TEST_CASE("cli discord on a product state reports D near 0") {
  const auto path = write_temp(
      state_to_json(tensor(random_density(2, 2, 5), random_density(2, 2, 6))).dump());
  const auto r = run_cli("discord --state " + path + " --restarts 8");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.stdout_text).at("D").get<double>() < 1e-8);
}

TEST_CASE("cli exit codes: parse error 2, validation error 3, missing file 2") {
  const auto bad = write_temp("{\"dim_a\": 2, ");
  CHECK(run_cli("discord --state " + bad).exit_code == 2);

  // valid JSON, invalid state (trace 2)
  Json j{{"dim_a", 1}, {"dim_b", 2}, {"matrix", matrix_to_json(Matrix::Identity(2, 2))}};
  const auto invalid = write_temp(j.dump());
  CHECK(run_cli("discord --state " + invalid).exit_code == 3);

  CHECK(run_cli("discord --state /nonexistent/state.json").exit_code == 2);
}

TEST_CASE("cli channel classify: depolarizing vs hadamard; transpose CP violation exits 3") {
  auto dep = run_cli("channel classify --channel-a zoo:depolarizing,p=0.5,d=2 --trials 50");
  REQUIRE(dep.exit_code == 0);
  auto jd = Json::parse(dep.stdout_text);
  CHECK(jd.at("cptp_valid").get<bool>());
  CHECK(jd.at("unital").get<bool>());
  CHECK(!jd.at("reversible_cptp").get<bool>());

  auto had = run_cli("channel classify --channel-a zoo:unitary,name=hadamard --trials 50");
  REQUIRE(had.exit_code == 0);
  CHECK(Json::parse(had.stdout_text).at("reversible_cptp").get<bool>());

  CHECK(run_cli("channel validate --channel-a zoo:isotropic,p=0.9,gamma=transpose,d=2")
            .exit_code == 3);
}

TEST_CASE("cli channel apply writes a valid state file") {
  const std::string out = std::string(std::tmpnam(nullptr)) + ".json";
  const auto r = run_cli("channel apply --channel-a zoo:depolarizing,p=1,d=2 --channel-b "
                         "zoo:identity,d=2 --state " + bell_file() + " --out " + out);
  REQUIRE(r.exit_code == 0);
  const auto s = load_state(out);
  // full depolarization on A of the Bell state leaves I/4
  CHECK((s.matrix() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-12);
  std::remove(out.c_str());
}

TEST_CASE("cli invariance demo: p=1 invariant, p=0.5 decreases D") {
  auto inv = run_cli("invariance --demo bell-isotropic --p 1 --restarts 8");
  REQUIRE(inv.exit_code == 0);
  CHECK(Json::parse(inv.stdout_text).at("verdict").at("D").get<std::string>() == "invariant");

  auto half = run_cli("invariance --demo bell-isotropic --p 0.5 --restarts 8");
  REQUIRE(half.exit_code == 0);
  auto jh = Json::parse(half.stdout_text);
  CHECK(jh.at("before").at("D").get<double>() > 0.99);
  CHECK(jh.at("after").at("D").get<double>() < 0.9);
}

TEST_CASE("cli suite: usage error on zero trials, deterministic output, csv") {
  CHECK(run_cli("suite --trials 0").exit_code == 2);

  const auto a = run_cli("suite --seed 3 --trials 2 --restarts 8");
  const auto b = run_cli("suite --seed 3 --trials 2 --restarts 8");
  REQUIRE(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
  const auto j = Json::parse(a.stdout_text);
  CHECK(j.at("subsuites").size() == 6);

  const auto csv = run_cli("suite --seed 3 --trials 2 --restarts 8 --format csv");
  CHECK(csv.stdout_text.rfind("subsuite,pass,fail,worst_delta", 0) == 0);
}

TEST_CASE("cli petz: unitary channel reports zero gap and recovery") {
  const auto rho = write_temp(
      state_to_json(BipartiteState(random_density(4, 4, 9), 2, 2)).dump());
  const auto sigma = write_temp(
      state_to_json(BipartiteState(random_density(4, 4, 10), 2, 2)).dump());
  const auto r = run_cli("petz --channel-a zoo:unitary,name=hadamard --state " + rho +
                         " --sigma " + sigma);
  // hadamard is 2x2 but the states are 4x4: dimension mismatch is a domain error
  CHECK(r.exit_code == 3);

  const auto rho2 = write_temp(
      state_to_json(BipartiteState(random_density(2, 2, 9), 1, 2)).dump());
  const auto sigma2 = write_temp(
      state_to_json(BipartiteState(random_density(2, 2, 10), 1, 2)).dump());
  const auto ok = run_cli("petz --channel-a zoo:unitary,name=hadamard --state " + rho2 +
                          " --sigma " + sigma2);
  REQUIRE(ok.exit_code == 0);
  const auto j = Json::parse(ok.stdout_text);
  CHECK(std::abs(j.at("gap").get<double>()) < 1e-9);
  CHECK(j.at("rho_recovered").get<bool>());
  CHECK(j.at("sigma_recovered").get<bool>());
}

TEST_CASE("QCORR_SEED env var is the fallback seed") {
  const std::string out_file = std::string(std::tmpnam(nullptr)) + ".out";
  const std::string cmd = "QCORR_SEED=7 " + cli_path() + " mutinfo --state " + bell_file() +
                          " > " + out_file;
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_file.c_str());
  CHECK(Json::parse(ss.str()).at("seed").get<std::uint64_t>() == 7);
}
