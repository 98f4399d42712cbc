#include "tra/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "tra/catalog.hpp"
#include "tra/emit.hpp"
#include "tra/errors.hpp"
#include "tra/graphene.hpp"
#include "tra/jmatrix.hpp"
#include "tra/potentials.hpp"
#include "tra/solver.hpp"
#include "tra/spinor.hpp"
#include "tra/validation.hpp"

namespace tra::cli {

using solver::Branch;

double RunConfig::numeric_or(const std::string& name, double fallback) const {
  auto it = numeric.find(name);
  return it == numeric.end() ? fallback : it->second;
}

Command parse_command(const std::string& name) {
  if (name == "spectrum") return Command::Spectrum;
  if (name == "wavefunction") return Command::Wavefunction;
  if (name == "jmatrix") return Command::Jmatrix;
  if (name == "graphene") return Command::Graphene;
  if (name == "catalog") return Command::Catalog;
  if (name == "validate") return Command::Validate;
  if (name == "table2") return Command::Table2;
  throw Error(ErrorKind::ParseError, "unknown command '" + name + "'");
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Spectrum: return "spectrum";
    case Command::Wavefunction: return "wavefunction";
    case Command::Jmatrix: return "jmatrix";
    case Command::Graphene: return "graphene";
    case Command::Catalog: return "catalog";
    case Command::Validate: return "validate";
    case Command::Table2: return "table2";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "malformed number for '" + key + "': " + value);
  }
  if (pos != value.size())
    throw Error(ErrorKind::ParseError, "malformed number for '" + key + "': " + value);
  return v;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool has_command = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "command") {
      cfg.command = parse_command(value);
      has_command = true;
    } else if (key == "entry") {
      cfg.entry = value;
    } else if (key == "branch") {
      if (value != "positive" && value != "negative")
        throw Error(ErrorKind::ParseError, "branch must be positive|negative");
      cfg.branch = value;
    } else if (key == "output.format") {
      if (value == "csv")
        cfg.format = OutFormat::Csv;
      else if (value == "json")
        cfg.format = OutFormat::Json;
      else
        throw Error(ErrorKind::ParseError, "output.format must be csv|json");
    } else if (key == "output.path") {
      cfg.out_path = value;
    } else if (key.rfind("param.", 0) == 0) {
      cfg.params[key.substr(6)] = parse_number(key, value);
    } else if (key.rfind("numeric.", 0) == 0) {
      cfg.numeric[key.substr(8)] = parse_number(key, value);
    } else {
      throw Error(ErrorKind::ParseError,
                  "unknown key '" + key + "' (strict mode)");
    }
  }
  if (!has_command)
    throw Error(ErrorKind::ParseError, "config is missing the 'command' key");
  return cfg;
}

std::string emit_config(const RunConfig& cfg) {
  std::string out;
  out += std::string("command = ") + command_name(cfg.command) + "\n";
  if (!cfg.entry.empty()) out += "entry = " + cfg.entry + "\n";
  out += "branch = " + cfg.branch + "\n";
  for (const auto& [k, v] : cfg.params)
    out += "param." + k + " = " + emit::format_number(v) + "\n";
  for (const auto& [k, v] : cfg.numeric)
    out += "numeric." + k + " = " + emit::format_number(v) + "\n";
  out += std::string("output.format = ") +
         (cfg.format == OutFormat::Csv ? "csv" : "json") + "\n";
  if (!cfg.out_path.empty()) out += "output.path = " + cfg.out_path + "\n";
  return out;
}

namespace {

catalog::Params entry_params(const catalog::Entry& e, const RunConfig& cfg) {
  catalog::Params p = e.defaults;
  for (const auto& [name, value] : cfg.params) {
    bool known = false;
    for (const auto& n : e.param_names)
      if (n == name) known = true;
    if (!known)
      throw Error(ErrorKind::ParseError, "entry '" + e.id +
                                             "' has no parameter '" + name +
                                             "' (strict mode)");
    p.set(name, value);
  }
  return p;
}

Branch branch_of(const RunConfig& cfg) {
  return cfg.branch == "negative" ? Branch::Negative : Branch::Positive;
}

void deliver(const RunConfig& cfg, const std::string& text,
             std::string* captured) {
  if (captured) *captured = text;
  if (!cfg.out_path.empty())
    emit::write_file(cfg.out_path, text);
  else if (!captured)
    std::cout << text;
}

int run_spectrum(const RunConfig& cfg, std::string* captured) {
  const auto& e = catalog::find(cfg.entry);
  auto p = entry_params(e, cfg);
  int n_max = static_cast<int>(cfg.numeric_or("n_max", 5));
  Branch b = branch_of(cfg);
  solver::Spectrum spec;
  for (int n = 0; n < n_max; ++n) {
    try {
      double eps = e.spectrum(p, n, b);
      solver::SpectrumEntry se;
      se.n = n;
      se.eps = eps;
      se.branch = b;
      spec.entries.push_back(se);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::InvalidBoundState) break;  // finite spectrum
      throw;
    }
  }
  deliver(cfg, emit::spectrum_text(spec, cfg.format == OutFormat::Csv
                                             ? emit::Format::Csv
                                             : emit::Format::Json),
          captured);
  return 0;
}

int run_wavefunction(const RunConfig& cfg, std::string* captured) {
  const auto& e = catalog::find(cfg.entry);
  auto p = entry_params(e, cfg);
  int n = static_cast<int>(cfg.numeric_or("n", 0));
  int points = static_cast<int>(cfg.numeric_or("grid_points", 4096));
  auto st = catalog::resolve_state(e, p, n, branch_of(cfg));
  auto grid = spinor::uniform_grid(st.domain.lo, st.domain.hi, points);
  auto dirac_cfg = e.residual_config(p);
  spinor::SpinorField field =
      st.is_lower ? spinor::assemble_from_lower(st.rule, dirac_cfg, st.eps, grid)
                  : spinor::assemble(st.rule, dirac_cfg, st.eps, grid);
  field = spinor::normalize(field);
  deliver(cfg, emit::spinor_text(field, cfg.format == OutFormat::Csv
                                            ? emit::Format::Csv
                                            : emit::Format::Json),
          captured);
  return 0;
}

int run_jmatrix(const RunConfig& cfg, std::string* captured) {
  const auto& e = catalog::find(cfg.entry);
  auto p = entry_params(e, cfg);
  double eps = cfg.numeric_or("eps", 1.5);
  int N = static_cast<int>(cfg.numeric_or("N", 12));
  jmatrix::TridiagonalBands bands;
  if (e.id == "spin_sinusoidal") {
    bands = catalog::sinusoidal_bands(p.at("m"), p.at("V0"), p.at("kappa"));
  } else if (e.id == "general_oscillator") {
    auto spec = basis::BasisSpec::laguerre(
        0.5, basis::CoordinateMap::make(basis::MapKind::Quadratic,
                                        p.get("kappa", 1.0) / 2.0),
        p.get("eta", 1.0));
    bands = jmatrix::bands(e.config(p), spec);
  } else {
    throw Error(ErrorKind::NotTridiagonalizable,
                "entry '" + e.id + "' has no registered tridiagonal basis; "
                "use spin_sinusoidal or general_oscillator");
  }
  emit::MatrixDump dump;
  for (int n = 0; n < N; ++n) {
    for (int m = std::max(0, n - 1); m < std::min(N, n + 2); ++m) {
      dump.n.push_back(n);
      dump.m.push_back(m);
      double v = (n == m) ? bands.d(n, eps)
                          : bands.c(std::min(n, m), eps);
      dump.value.push_back(v);
    }
  }
  deliver(cfg, emit::matrix_text(dump, cfg.format == OutFormat::Csv
                                           ? emit::Format::Csv
                                           : emit::Format::Json),
          captured);
  return 0;
}

int run_graphene(const RunConfig& cfg, std::string* captured) {
  graphene::FieldProfile prof;
  std::string fam = cfg.entry.empty() ? "cosh_barrier" : cfg.entry;
  if (fam == "constant") prof.family = graphene::FieldFamily::Constant;
  else if (fam == "inverse_square") prof.family = graphene::FieldFamily::InverseSquare;
  else if (fam == "cosh_barrier") prof.family = graphene::FieldFamily::CoshBarrier;
  else if (fam == "exp_decay") prof.family = graphene::FieldFamily::ExpDecay;
  else if (fam == "hulthen") prof.family = graphene::FieldFamily::Hulthen;
  else if (fam == "sec_squared") prof.family = graphene::FieldFamily::SecSquared;
  else if (fam == "sinh_squared") prof.family = graphene::FieldFamily::SinhSquared;
  else
    throw Error(ErrorKind::InvalidProfile, "unknown field family '" + fam + "'");
  auto it = cfg.params.find("B0");
  prof.B0 = it == cfg.params.end() ? 1.0 : it->second;
  it = cfg.params.find("alpha");
  prof.alpha = it == cfg.params.end() ? 1.0 : it->second;

  double k_min = cfg.numeric_or("k_min", 0.2);
  double k_max = cfg.numeric_or("k_max", 1.0);
  int k_points = static_cast<int>(cfg.numeric_or("k_points", 5));
  int n_max = static_cast<int>(cfg.numeric_or("n_max", 3));
  Branch b = branch_of(cfg);

  std::string out = "k,n,epsilon\n";
  for (int i = 0; i < k_points; ++i) {
    prof.k = k_points == 1 ? k_min
                           : k_min + (k_max - k_min) * i / (k_points - 1);
    for (int n = 0; n < n_max; ++n) {
      try {
        double eps = graphene::landau_spectrum(prof, n, b);
        out += emit::format_number(prof.k) + ',' + std::to_string(n) + ',' +
               emit::format_number(eps) + '\n';
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::InvalidBoundState) break;
        throw;
      }
    }
  }
  deliver(cfg, out, captured);
  return 0;
}

int run_catalog_list(const RunConfig& cfg, std::string* captured) {
  std::string out = "id,title,symmetry,parameters,note\n";
  for (const auto& e : catalog::entries()) {
    std::string names;
    for (const auto& n : e.param_names) names += (names.empty() ? "" : " ") + n;
    out += e.id + ",\"" + e.title + "\"," + potentials::to_string(e.cls) + ",\"" +
           names + "\",\"" + e.note + "\"\n";
  }
  for (const auto& r : catalog::schrodinger_rows()) {
    std::string names;
    for (const auto& n : r.param_names) names += (names.empty() ? "" : " ") + n;
    out += r.id + ",\"" + r.title + "\",one-component,\"" + names + "\",\"" +
           r.note + "\"\n";
  }
  deliver(cfg, out, captured);
  return 0;
}

int run_validate(const RunConfig& cfg, std::string* captured) {
  bool quick = cfg.numeric_or("quick", 0.0) != 0.0;
  auto results = validation::run_all(quick);
  deliver(cfg, validation::report_text(results), captured);
  for (const auto& r : results)
    if (!r.pass) return 2;
  return 0;
}

int run_table2(const RunConfig& cfg, std::string* captured) {
  // Pinned headline reproduction: m = 1, V0 = 1/2, mu = nu = 1/2,
  // kappa in {1.5, 0.1}; ten levels per branch.
  const double m = 1.0, V0 = 0.5;
  std::string out = "kappa,n,branch,epsilon\n";
  for (double kappa : {1.5, 0.1}) {
    auto bands = catalog::table2_bands(m, V0, kappa);
    solver::ScanOptions opts;
    opts.max_roots = 10;
    opts.tol = cfg.numeric_or("tol", 1e-8);
    double hi = (kappa > 1.0) ? 16.5 : 1.2;
    auto pos = solver::eigenvalue_scan(bands, 1e-3, hi, Branch::Positive, opts);
    double lo = (kappa > 1.0) ? -17.5 : -2.3;
    auto neg = solver::eigenvalue_scan(bands, lo, -m - 1e-3, Branch::Negative, opts);
    for (const auto& e : pos.entries)
      out += emit::format_number(kappa) + ',' + std::to_string(e.n) +
             ",positive," + emit::format_number(e.eps) + '\n';
    for (const auto& e : neg.entries)
      out += emit::format_number(kappa) + ',' + std::to_string(e.n) +
             ",negative," + emit::format_number(e.eps) + '\n';
  }
  deliver(cfg, out, captured);
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::string* captured_output) {
  try {
    switch (cfg.command) {
      case Command::Spectrum: return run_spectrum(cfg, captured_output);
      case Command::Wavefunction: return run_wavefunction(cfg, captured_output);
      case Command::Jmatrix: return run_jmatrix(cfg, captured_output);
      case Command::Graphene: return run_graphene(cfg, captured_output);
      case Command::Catalog: return run_catalog_list(cfg, captured_output);
      case Command::Validate: return run_validate(cfg, captured_output);
      case Command::Table2: return run_table2(cfg, captured_output);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::UnknownEntry:
      case ErrorKind::MissingParameter:
      case ErrorKind::InvalidParameter:
      case ErrorKind::IoError:
        return 3;
      case ErrorKind::ConvergenceFailure:
      case ErrorKind::IntegrationError:
      case ErrorKind::ResolutionError:
      case ErrorKind::NoRoot:
      case ErrorKind::SeriesDivergence:
      case ErrorKind::RecursionBreakdown:
        return 4;
      default:
        return 3;
    }
  }
  return 3;
}

}  // namespace tra::cli
