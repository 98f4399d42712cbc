// Command-line front end: subcommand dispatch over the flat config format.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tra/cli.hpp"
#include "tra/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Tridiagonal-representation solver for the 1D Dirac equation"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  double tol = 0.0;
  int N = 0;

  std::vector<CLI::App*> subs;
  for (const char* name : {"spectrum", "wavefunction", "jmatrix", "graphene",
                           "catalog", "validate", "table2"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "key = value run description");
    sub->add_option("--out", out_path, "output path (default stdout)");
    sub->add_option("--format", format, "csv|json");
    sub->add_option("--tol", tol, "solver tolerance override");
    sub->add_option("--N", N, "truncation/grid override");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    tra::cli::RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read config '" << config_path << "'\n";
        return 3;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      cfg = tra::cli::parse_config(buf.str());
    }
    auto* chosen = app.get_subcommands().front();
    auto cmd = tra::cli::parse_command(chosen->get_name());
    if (!config_path.empty() && cfg.command != cmd) {
      std::cerr << "error: config command '"
                << tra::cli::command_name(cfg.command)
                << "' does not match subcommand '" << chosen->get_name() << "'\n";
      return 3;
    }
    cfg.command = cmd;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (!format.empty()) {
      if (format == "csv")
        cfg.format = tra::cli::OutFormat::Csv;
      else if (format == "json")
        cfg.format = tra::cli::OutFormat::Json;
      else {
        std::cerr << "error: --format must be csv or json\n";
        return 3;
      }
    }
    if (tol > 0.0) cfg.numeric["tol"] = tol;
    if (N > 0) cfg.numeric["N"] = N;
    return tra::cli::run(cfg);
  } catch (const tra::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
