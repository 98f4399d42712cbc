#pragma once

#include <map>
#include <optional>
#include <string>

namespace tra::cli {

enum class Command {
  Spectrum,
  Wavefunction,
  Jmatrix,
  Graphene,
  Catalog,
  Validate,
  Table2,
};

enum class OutFormat { Csv, Json };

// Flat key-value run description. Unknown keys are fatal: silent typos in
// physics parameters are worse than friction.
struct RunConfig {
  Command command = Command::Spectrum;
  std::string entry;
  std::map<std::string, double> params;    // param.<name>
  std::map<std::string, double> numeric;   // numeric.<name>
  std::string branch = "positive";
  OutFormat format = OutFormat::Csv;
  std::string out_path;  // empty = stdout

  double numeric_or(const std::string& name, double fallback) const;
};

Command parse_command(const std::string& name);  // throws ParseError
const char* command_name(Command c);

// Strict parser for the flat key = value document.
RunConfig parse_config(const std::string& text);

// Canonical re-emission; parse(emit_config(c)) == c.
std::string emit_config(const RunConfig& cfg);

// Executes a run and writes its artifact. Returns the process exit code:
// 0 success, 2 validation failure, 3 config error, 4 numeric non-convergence.
int run(const RunConfig& cfg, std::string* captured_output = nullptr);

}  // namespace tra::cli
