#pragma once

#include <functional>
#include <vector>

#include "tra/potentials.hpp"

namespace tra::spinor {

// Two-component field sampled on a uniform grid. For scalar-only
// configurations the stored pair is the rotated (Dirac-Weyl) one, and the
// residual is evaluated against the rotated operator; the rotation is
// unitary so the residual is the same number.
struct SpinorField {
  std::vector<double> grid;
  std::vector<double> upper;
  std::vector<double> lower;
  double eps = 0.0;
  double norm = 0.0;
  bool rotated_frame = false;

  double spacing() const;  // throws GridError if non-uniform
};

double trapezoid_norm(const SpinorField& field);

// Builds the spinor from one component rule, generating the other through
// the first-order coupling of the wave equation:
//   psi^- = [W + d/dx] psi^+ / (m + eps + S - V)          (from upper)
//   psi^+ = [d/dx - W] psi^- / (m + eps... see below)     (from lower)
//   chi^-+ = [ -+d/dx + F ] chi^+- / eps                  (scalar-only)
// An analytic derivative rule may be supplied; otherwise a 5-point central
// difference is used.
struct ComponentRule {
  std::function<double(double)> value;
  std::function<double(double)> deriv;  // optional
};

SpinorField assemble(const ComponentRule& upper_rule,
                     const potentials::PotentialConfig& config, double eps,
                     const std::vector<double>& grid);

// For entries whose closed form is the lower component.
SpinorField assemble_from_lower(const ComponentRule& lower_rule,
                                const potentials::PotentialConfig& config,
                                double eps, const std::vector<double>& grid);

SpinorField normalize(const SpinorField& field);

// Relative RMS of (H - eps) applied to the field with 5-point derivatives.
double dirac_residual(const SpinorField& field,
                      const potentials::PotentialConfig& config);

// Uniform grid helper: n points across [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace tra::spinor
