#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tra/cli.hpp"
#include "tra/emit.hpp"
#include "tra/errors.hpp"

using namespace tra;

namespace {

std::string minimal_doc() {
  return "command = spectrum\n"
         "entry = pseudospin_oscillator\n"
         "param.m = 1\n"
         "param.V0 = 0.5\n"
         "numeric.n_max = 5\n";
}

#ifdef TRA_CLI_PATH
int run_binary(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(TRA_CLI_PATH) + " " + args;
  if (out) {
    std::string tmp = "/tmp/tra_cli_capture.txt";
    int rc = std::system((cmd + " > " + tmp + " 2>/dev/null").c_str());
    std::ifstream in(tmp);
    std::stringstream buf;
    buf << in.rdbuf();
    *out = buf.str();
    return WEXITSTATUS(rc);
  }
  int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}
#endif

}  // namespace

TEST_CASE("minimal spectrum request parses with defaults filled") {
  auto cfg = cli::parse_config(minimal_doc());
  CHECK(cfg.command == cli::Command::Spectrum);
  CHECK(cfg.entry == "pseudospin_oscillator");
  CHECK(cfg.params.at("m") == 1.0);
  CHECK(cfg.numeric.at("n_max") == 5.0);
  CHECK(cfg.branch == "positive");
  CHECK(cfg.format == cli::OutFormat::Csv);
}

TEST_CASE("config round trip is semantically identical") {
  auto cfg = cli::parse_config(minimal_doc());
  auto again = cli::parse_config(cli::emit_config(cfg));
  CHECK(again.command == cfg.command);
  CHECK(again.entry == cfg.entry);
  CHECK(again.params == cfg.params);
  CHECK(again.numeric == cfg.numeric);
  CHECK(again.branch == cfg.branch);
  CHECK(again.format == cfg.format);
}

TEST_CASE("strict mode rejects unknown keys and malformed numbers") {
  CHECK_THROWS_AS(cli::parse_config("command = spectrum\nparma.m = 1\n"), Error);
  CHECK_THROWS_AS(cli::parse_config("command = spectrum\nparam.m = abc\n"), Error);
  CHECK_THROWS_AS(cli::parse_config("command = warp\n"), Error);
  CHECK_THROWS_AS(cli::parse_config("entry = x\n"), Error);  // no command
}

TEST_CASE("unknown entries and parameters are fatal") {
  auto cfg = cli::parse_config(minimal_doc());
  cfg.entry = "nonexistent";
  std::string out;
  CHECK(cli::run(cfg, &out) == 3);

  auto cfg2 = cli::parse_config(minimal_doc());
  cfg2.params["bogus"] = 1.0;
  CHECK(cli::run(cfg2, &out) == 3);
}

TEST_CASE("spectrum artifact has the fixed columns") {
  auto cfg = cli::parse_config(minimal_doc());
  std::string out;
  REQUIRE(cli::run(cfg, &out) == 0);
  std::istringstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,branch,epsilon,N_used,delta_converge");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 5);
}

TEST_CASE("finite spectra emit only the existing levels") {
  std::string doc =
      "command = spectrum\n"
      "entry = graphene_exp_barrier\n"
      "numeric.n_max = 12\n";
  auto cfg = cli::parse_config(doc);
  std::string out;
  REQUIRE(cli::run(cfg, &out) == 0);
  int rows = -1;  // discount the header
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("json and csv artifacts carry identical numbers") {
  auto cfg = cli::parse_config(minimal_doc());
  std::string csv;
  REQUIRE(cli::run(cfg, &csv) == 0);
  cfg.format = cli::OutFormat::Json;
  std::string json_text;
  REQUIRE(cli::run(cfg, &json_text) == 0);
  auto parsed = nlohmann::json::parse(json_text);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  int i = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto first_comma = line.find(',');
    auto second = line.find(',', first_comma + 1);
    auto third = line.find(',', second + 1);
    std::string eps_csv = line.substr(second + 1, third - second - 1);
    CHECK(parsed["spectrum"][i]["epsilon"].get<std::string>() == eps_csv);
    ++i;
  }
  CHECK(i == 5);
}

TEST_CASE("identical configs produce byte-identical artifacts") {
  auto cfg = cli::parse_config(minimal_doc());
  std::string a, b;
  REQUIRE(cli::run(cfg, &a) == 0);
  REQUIRE(cli::run(cfg, &b) == 0);
  CHECK(a == b);
}

TEST_CASE("wavefunction artifact format") {
  std::string doc =
      "command = wavefunction\n"
      "entry = pseudospin_oscillator\n"
      "numeric.n = 0\n"
      "numeric.grid_points = 128\n";
  auto cfg = cli::parse_config(doc);
  std::string out;
  REQUIRE(cli::run(cfg, &out) == 0);
  CHECK(out.rfind("x,psi_plus,psi_minus\n", 0) == 0);
}

TEST_CASE("matrix dump is tridiagonal and symmetric") {
  std::string doc =
      "command = jmatrix\n"
      "entry = spin_sinusoidal\n"
      "numeric.eps = 1.4\n"
      "numeric.N = 6\n";
  auto cfg = cli::parse_config(doc);
  std::string out;
  REQUIRE(cli::run(cfg, &out) == 0);
  CHECK(out.rfind("n,m,value\n", 0) == 0);
  // 6 diagonal + 2*5 off-diagonal rows.
  int rows = -1;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 16);
}

TEST_CASE("dispersion sweep emits plot-ready rows") {
  std::string doc =
      "command = graphene\n"
      "entry = cosh_barrier\n"
      "param.B0 = 2.8\n"
      "param.alpha = 0.7\n"
      "numeric.k_min = 0.1\n"
      "numeric.k_max = 0.3\n"
      "numeric.k_points = 3\n"
      "numeric.n_max = 2\n";
  auto cfg = cli::parse_config(doc);
  std::string out;
  REQUIRE(cli::run(cfg, &out) == 0);
  CHECK(out.rfind("k,n,epsilon\n", 0) == 0);
}

TEST_CASE("table2 emits forty rows with the expected spot values") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::Table2;
  std::string out;
  REQUIRE(cli::run(cfg, &out) == 0);
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "kappa,n,branch,epsilon");
  int rows = 0;
  double spot_pos = 0.0, spot_neg = 0.0, spot_small = 0.0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    if (line.rfind("1.5,0,positive,", 0) == 0)
      spot_pos = std::stod(line.substr(15));
    if (line.rfind("1.5,0,negative,", 0) == 0)
      spot_neg = std::stod(line.substr(15));
    if (line.rfind("0.1,9,negative,", 0) == 0)
      spot_small = std::stod(line.substr(15));
  }
  CHECK(rows == 40);
  CHECK(std::abs(spot_pos - 1.36094) <= 5e-4);
  CHECK(std::abs(spot_neg - (-2.36093)) <= 5e-4);
  CHECK(std::abs(spot_small - (-2.044960)) <= 5e-4);
}

#ifdef TRA_CLI_PATH
TEST_CASE("binary exit codes follow the contract") {
  // Config error.
  emit::write_file("/tmp/tra_bad.cfg", "command = spectrum\nentry = nope\n");
  CHECK(run_binary("spectrum --config /tmp/tra_bad.cfg") == 3);
  // Success path writes the artifact file.
  emit::write_file("/tmp/tra_ok.cfg", minimal_doc());
  CHECK(run_binary("spectrum --config /tmp/tra_ok.cfg --out /tmp/tra_out.csv") == 0);
  std::ifstream f("/tmp/tra_out.csv");
  CHECK(f.good());
  // Mismatched subcommand vs config command.
  CHECK(run_binary("table2 --config /tmp/tra_ok.cfg") == 3);
  // table2 without a config works (pinned parameters).
  std::string out;
  CHECK(run_binary("table2", &out) == 0);
  CHECK(out.rfind("kappa,", 0) == 0);
}
#endif
