#pragma once

#include <functional>
#include <limits>

#include "tra/orthopoly.hpp"

namespace tra::basis {

enum class MapKind { Linear, Quadratic, ExpDecay, Tanh, ShiftedExp, Cosine };

struct MapEval {
  double y;
  double yp;   // dy/dx
  double ypp;  // d^2y/dx^2
};

// Monotone coordinate transformation x -> y with derivative of the form
// y' = kappa y^a e^{by} (Laguerre lane) or y' = kappa (1-y)^a (1+y)^b
// (Jacobi lane). The quadratic map covers the real line two-to-one; its
// fold factor enters the normalization of x-space inner products.
struct CoordinateMap {
  MapKind kind = MapKind::Linear;
  double lambda = 1.0;
  double mu_scale = 1.0;  // ExpDecay only: y = mu_scale * exp(-lambda x)
  double kappa = 0.0, a = 0.0, b = 0.0;
  double x_min = 0.0, x_max = 0.0;
  int fold = 1;

  static CoordinateMap make(MapKind kind, double lambda, double mu_scale = 1.0);
  MapEval apply(double x) const;  // throws DomainError outside [x_min, x_max]
  bool x_unbounded_below() const { return x_min == -std::numeric_limits<double>::infinity(); }
  bool x_unbounded_above() const { return x_max == std::numeric_limits<double>::infinity(); }
};

// A square-integrable upper-component basis. alpha/beta are the envelope
// exponents; they are pinned to the polynomial parameters by the
// tridiagonality constraints (2*alpha + a = nu + 1 and 2*beta - b = 1 for
// Laguerre; 2*beta + b = nu + 1 and 2*alpha + a = mu + 1 for Jacobi), and
// construction rejects any violation. Normalization is with respect to the
// x measure so the Gram matrix is the identity.
struct BasisSpec {
  orthopoly::PolyKind kind = orthopoly::PolyKind::Laguerre;
  double alpha = 0.0, beta = 0.0;
  double nu = 0.0;  // Laguerre and Jacobi
  double mu = 0.0;  // Jacobi only
  CoordinateMap map;
  double eta = 1.0;  // kinetic-balance constant

  // Computes alpha/beta from the constraints.
  static BasisSpec laguerre(double nu, const CoordinateMap& map, double eta = 1.0);
  static BasisSpec jacobi(double mu, double nu, const CoordinateMap& map,
                          double eta = 1.0);
  // Explicit exponents, validated against the constraints.
  static BasisSpec laguerre_explicit(double alpha, double beta, double nu,
                                     const CoordinateMap& map, double eta = 1.0);
  static BasisSpec jacobi_explicit(double alpha, double beta, double mu, double nu,
                                   const CoordinateMap& map, double eta = 1.0);

  double norm_constant(int n) const;  // x-measure normalization A~_n
};

double basis_upper(const BasisSpec& spec, int n, double x);
double basis_upper_deriv(const BasisSpec& spec, int n, double x);

// Kinetic-balance lower component eta/(m+eps) [W + d/dx] phi_n^+.
double basis_lower(const BasisSpec& spec, int n, double x,
                   const std::function<double(double)>& W, double eps, double m);

// Phase accumulated by gauging away the space component of the vector
// potential: Lambda(x) = int_{x0}^{x} U dt.
double gauge_away(const std::function<double(double)>& U, double x0, double x);

}  // namespace tra::basis
