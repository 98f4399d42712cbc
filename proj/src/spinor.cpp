#include "tra/spinor.hpp"

#include <cmath>
#include <string>

#include "tra/errors.hpp"

namespace tra::spinor {

using potentials::PotentialConfig;
using potentials::SymmetryClass;

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

double SpinorField::spacing() const {
  if (grid.size() < 16) throw Error(ErrorKind::GridError, "grid shorter than 16");
  double h = grid[1] - grid[0];
  for (std::size_t i = 1; i + 1 < grid.size(); ++i)
    if (std::abs(grid[i + 1] - grid[i] - h) > 1e-9 * std::abs(h))
      throw Error(ErrorKind::GridError, "grid is not uniform");
  return h;
}

double trapezoid_norm(const SpinorField& field) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < field.grid.size(); ++i) {
    double dx = field.grid[i + 1] - field.grid[i];
    double a = field.upper[i] * field.upper[i] + field.lower[i] * field.lower[i];
    double b = field.upper[i + 1] * field.upper[i + 1] +
               field.lower[i + 1] * field.lower[i + 1];
    s += 0.5 * dx * (a + b);
  }
  return s;
}

namespace {

// 4th-order first derivative of sampled values; one-sided at the edges.
std::vector<double> derivative_samples(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size());
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n) {
      d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    } else if (i == 0) {
      d[i] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] -
              3.0 * f[4]) / (12.0 * h);
    } else if (i == 1) {
      d[i] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) /
             (12.0 * h);
    } else if (i == n - 2) {
      d[i] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] +
              6.0 * f[n - 4] - f[n - 5]) / (12.0 * h);
    } else {
      d[i] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] -
              16.0 * f[n - 4] + 3.0 * f[n - 5]) / (12.0 * h);
    }
  }
  return d;
}

std::vector<double> sample_derivative(const ComponentRule& rule,
                                      const std::vector<double>& samples,
                                      const std::vector<double>& grid, double h) {
  if (rule.deriv) {
    std::vector<double> d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) d[i] = rule.deriv(grid[i]);
    return d;
  }
  return derivative_samples(samples, h);
}

}  // namespace

SpinorField assemble(const ComponentRule& upper_rule, const PotentialConfig& config,
                     double eps, const std::vector<double>& grid) {
  SpinorField field;
  field.grid = grid;
  field.eps = eps;
  const double h = [&] {
    SpinorField probe;
    probe.grid = grid;
    return probe.spacing();
  }();

  field.upper.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    field.upper[i] = upper_rule.value(grid[i]);
  std::vector<double> du = sample_derivative(upper_rule, field.upper, grid, h);

  SymmetryClass cls = potentials::classify(config);
  field.lower.resize(grid.size());
  if (cls == SymmetryClass::ScalarOnly) {
    if (eps == 0.0)
      throw Error(ErrorKind::SingularCoupling, "scalar-only coupling needs eps != 0");
    field.rotated_frame = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double F = config.m + config.S.eval(grid[i]);
      field.lower[i] = (F * field.upper[i] - du[i]) / eps;
    }
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double x = grid[i];
      double den = config.m + eps + config.S.eval(x) - config.V.eval(x);
      if (std::abs(den) < 1e-9 * (1.0 + std::abs(config.m) + std::abs(eps)))
        throw Error(ErrorKind::SingularCoupling,
                    "coupling denominator vanishes near x = " + std::to_string(x));
      field.lower[i] = (config.W.eval(x) * field.upper[i] + du[i]) / den;
    }
  }
  field.norm = trapezoid_norm(field);
  return field;
}

SpinorField assemble_from_lower(const ComponentRule& lower_rule,
                                const PotentialConfig& config, double eps,
                                const std::vector<double>& grid) {
  SpinorField field;
  field.grid = grid;
  field.eps = eps;
  const double h = [&] {
    SpinorField probe;
    probe.grid = grid;
    return probe.spacing();
  }();

  field.lower.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    field.lower[i] = lower_rule.value(grid[i]);
  std::vector<double> dl = sample_derivative(lower_rule, field.lower, grid, h);

  field.upper.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double x = grid[i];
    double den = config.m + config.S.eval(x) + config.V.eval(x) - eps;
    if (std::abs(den) < 1e-9 * (1.0 + std::abs(config.m) + std::abs(eps)))
      throw Error(ErrorKind::SingularCoupling,
                  "coupling denominator vanishes near x = " + std::to_string(x));
    field.upper[i] = (dl[i] - config.W.eval(x) * field.lower[i]) / den;
  }
  field.norm = trapezoid_norm(field);
  return field;
}

SpinorField normalize(const SpinorField& field) {
  double n = trapezoid_norm(field);
  if (n <= 0.0) throw Error(ErrorKind::ZeroField, "cannot normalize a zero field");
  SpinorField out = field;
  double s = 1.0 / std::sqrt(n);
  for (auto& v : out.upper) v *= s;
  for (auto& v : out.lower) v *= s;
  out.norm = trapezoid_norm(out);
  return out;
}

double dirac_residual(const SpinorField& field, const PotentialConfig& config) {
  const double h = field.spacing();
  const int n = static_cast<int>(field.grid.size());
  std::vector<double> du = derivative_samples(field.upper, h);
  std::vector<double> dl = derivative_samples(field.lower, h);

  double num = 0.0, den = 0.0;
  for (int i = 2; i + 2 < n; ++i) {
    double x = field.grid[i];
    double r1, r2;
    if (field.rotated_frame) {
      double F = config.m + config.S.eval(x);
      r1 = dl[i] + F * field.lower[i] - field.eps * field.upper[i];
      r2 = -du[i] + F * field.upper[i] - field.eps * field.lower[i];
    } else {
      double S = config.S.eval(x), V = config.V.eval(x), W = config.W.eval(x);
      r1 = (config.m + S + V - field.eps) * field.upper[i] - dl[i] +
           W * field.lower[i];
      r2 = du[i] + W * field.upper[i] + (V - config.m - S - field.eps) * field.lower[i];
    }
    num += r1 * r1 + r2 * r2;
    den += field.upper[i] * field.upper[i] + field.lower[i] * field.lower[i];
  }
  if (den == 0.0) throw Error(ErrorKind::ZeroField, "residual of a zero field");
  return std::sqrt(num / den);
}

}  // namespace tra::spinor
