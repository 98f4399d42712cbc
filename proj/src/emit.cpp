#include "tra/emit.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "tra/errors.hpp"

namespace tra::emit {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

const char* branch_name(solver::Branch b) {
  return b == solver::Branch::Positive ? "positive" : "negative";
}

}  // namespace

std::string spectrum_text(const solver::Spectrum& s, Format f) {
  if (f == Format::Csv) {
    std::string out = "n,branch,epsilon,N_used,delta_converge\n";
    for (const auto& e : s.entries) {
      out += std::to_string(e.n) + ',' + branch_name(e.branch) + ',' +
             format_number(e.eps) + ',' + std::to_string(e.N_used) + ',' +
             format_number(e.delta_converge) + '\n';
    }
    return out;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : s.entries) {
    rows.push_back({{"n", e.n},
                    {"branch", branch_name(e.branch)},
                    {"epsilon", format_number(e.eps)},
                    {"N_used", e.N_used},
                    {"delta_converge", format_number(e.delta_converge)}});
  }
  return nlohmann::json{{"spectrum", rows}}.dump(2) + "\n";
}

std::string spinor_text(const spinor::SpinorField& field, Format f) {
  if (f == Format::Csv) {
    std::string out = "x,psi_plus,psi_minus\n";
    for (std::size_t i = 0; i < field.grid.size(); ++i) {
      out += format_number(field.grid[i]) + ',' + format_number(field.upper[i]) +
             ',' + format_number(field.lower[i]) + '\n';
    }
    return out;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < field.grid.size(); ++i) {
    rows.push_back({{"x", format_number(field.grid[i])},
                    {"psi_plus", format_number(field.upper[i])},
                    {"psi_minus", format_number(field.lower[i])}});
  }
  return nlohmann::json{{"epsilon", format_number(field.eps)},
                        {"samples", rows}}.dump(2) + "\n";
}

std::string matrix_text(const MatrixDump& dump, Format f) {
  if (f == Format::Csv) {
    std::string out = "n,m,value\n";
    for (std::size_t i = 0; i < dump.value.size(); ++i) {
      out += std::to_string(dump.n[i]) + ',' + std::to_string(dump.m[i]) + ',' +
             format_number(dump.value[i]) + '\n';
    }
    return out;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < dump.value.size(); ++i) {
    rows.push_back({{"n", dump.n[i]},
                    {"m", dump.m[i]},
                    {"value", format_number(dump.value[i])}});
  }
  return nlohmann::json{{"matrix", rows}}.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace tra::emit
