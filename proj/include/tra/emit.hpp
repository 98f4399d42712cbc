#pragma once

#include <string>
#include <vector>

#include "tra/solver.hpp"
#include "tra/spinor.hpp"

namespace tra::emit {

enum class Format { Csv, Json };

struct MatrixDump {
  std::vector<int> n, m;
  std::vector<double> value;
};

// Fixed-column encodings, numbers at 12 significant digits, deterministic.
std::string spectrum_text(const solver::Spectrum& s, Format f);
std::string spinor_text(const spinor::SpinorField& field, Format f);
std::string matrix_text(const MatrixDump& dump, Format f);

void write_file(const std::string& path, const std::string& text);

std::string format_number(double v);  // %.12g, locale-independent

}  // namespace tra::emit
