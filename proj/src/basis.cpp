#include "tra/basis.hpp"

#include <cmath>

#include "tra/errors.hpp"
#include "tra/quadrature.hpp"

namespace tra::basis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

// 0^p limits: 0 for p > 0, 1 for p == 0, undefined for p < 0.
double pow_safe(double base, double p) {
  if (base <= 0.0) {
    if (base < -1e-12) throw Error(ErrorKind::DomainError, "negative base");
    if (p > 0.0) return 0.0;
    if (p == 0.0) return 1.0;
    throw Error(ErrorKind::LimitUndefined, "0 raised to a negative exponent");
  }
  return std::pow(base, p);
}

}  // namespace

CoordinateMap CoordinateMap::make(MapKind kind, double lambda, double mu_scale) {
  if (lambda <= 0.0)
    throw Error(ErrorKind::InvalidParameter, "coordinate map requires lambda > 0");
  CoordinateMap m;
  m.kind = kind;
  m.lambda = lambda;
  m.mu_scale = mu_scale;
  switch (kind) {
    case MapKind::Linear:  // y = lambda x on [0, inf)
      m.kappa = lambda; m.a = 0.0; m.b = 0.0;
      m.x_min = 0.0; m.x_max = kInf;
      break;
    case MapKind::Quadratic:  // y = (lambda x)^2, two-to-one on R
      m.kappa = 2.0 * lambda; m.a = 0.5; m.b = 0.0;
      m.x_min = -kInf; m.x_max = kInf;
      m.fold = 2;
      break;
    case MapKind::ExpDecay:  // y = mu e^{-lambda x} on R, decreasing
      if (mu_scale <= 0.0)
        throw Error(ErrorKind::InvalidParameter, "ExpDecay requires mu_scale > 0");
      m.kappa = -lambda; m.a = 1.0; m.b = 0.0;
      m.x_min = -kInf; m.x_max = kInf;
      break;
    case MapKind::Tanh:  // y = tanh(lambda x) on R
      m.kappa = lambda; m.a = 1.0; m.b = 1.0;
      m.x_min = -kInf; m.x_max = kInf;
      break;
    case MapKind::ShiftedExp:  // y = 1 - 2 e^{-lambda x} on [0, inf)
      m.kappa = lambda; m.a = 1.0; m.b = 0.0;
      m.x_min = 0.0; m.x_max = kInf;
      break;
    case MapKind::Cosine:
      // y = cos(lambda x). The full Jacobi range [-1,1] needs lambda x in
      // [0, pi], not [0, pi/2].
      m.kappa = -lambda; m.a = 0.5; m.b = 0.5;
      m.x_min = 0.0; m.x_max = kPi / lambda;
      break;
  }
  return m;
}

MapEval CoordinateMap::apply(double x) const {
  if (x < x_min || x > x_max)
    throw Error(ErrorKind::DomainError, "x outside the coordinate map domain");
  MapEval e{};
  const double l = lambda;
  switch (kind) {
    case MapKind::Linear:
      e.y = l * x; e.yp = l; e.ypp = 0.0;
      break;
    case MapKind::Quadratic:
      e.y = l * l * x * x; e.yp = 2.0 * l * l * x; e.ypp = 2.0 * l * l;
      break;
    case MapKind::ExpDecay:
      e.y = mu_scale * std::exp(-l * x);
      e.yp = -l * e.y;
      e.ypp = l * l * e.y;
      break;
    case MapKind::Tanh: {
      e.y = std::tanh(l * x);
      double sech2 = 1.0 - e.y * e.y;
      e.yp = l * sech2;
      e.ypp = -2.0 * l * l * e.y * sech2;
      break;
    }
    case MapKind::ShiftedExp: {
      double ex = std::exp(-l * x);
      e.y = 1.0 - 2.0 * ex;
      e.yp = 2.0 * l * ex;
      e.ypp = -2.0 * l * l * ex;
      break;
    }
    case MapKind::Cosine:
      e.y = std::cos(l * x);
      e.yp = -l * std::sin(l * x);
      e.ypp = -l * l * e.y;
      break;
  }
  return e;
}

namespace {

void check_constraints(const BasisSpec& s) {
  const double a = s.map.a, b = s.map.b;
  if (s.kind == orthopoly::PolyKind::Laguerre) {
    if (s.nu <= -1.0) throw Error(ErrorKind::InvalidBasis, "nu <= -1");
    if (std::abs(2.0 * s.alpha + a - (s.nu + 1.0)) > 1e-12 ||
        std::abs(2.0 * s.beta - b - 1.0) > 1e-12)
      throw Error(ErrorKind::InvalidBasis,
                  "Laguerre constraint 2a+map_a = nu+1, 2b-map_b = 1 violated");
    // x-orthonormality holds exactly when the map weight matches the
    // Laguerre weight, i.e. y' = kappa sqrt(y).
    if (std::abs(a - 0.5) > 1e-12 || std::abs(b) > 1e-12)
      throw Error(ErrorKind::InvalidBasis,
                  "Laguerre basis requires the quadratic map for x-orthonormality");
  } else if (s.kind == orthopoly::PolyKind::Jacobi) {
    if (s.mu <= -1.0 || s.nu <= -1.0)
      throw Error(ErrorKind::InvalidBasis, "mu or nu <= -1");
    if (std::abs(2.0 * s.alpha + a - (s.mu + 1.0)) > 1e-12 ||
        std::abs(2.0 * s.beta + b - (s.nu + 1.0)) > 1e-12)
      throw Error(ErrorKind::InvalidBasis,
                  "Jacobi constraint 2a+map_a = mu+1, 2b+map_b = nu+1 violated");
    if (std::abs(a - 0.5) > 1e-12 || std::abs(b - 0.5) > 1e-12)
      throw Error(ErrorKind::InvalidBasis,
                  "Jacobi basis requires the cosine map for x-orthonormality");
  } else {
    throw Error(ErrorKind::InvalidBasis, "unsupported basis kind");
  }
}

}  // namespace

BasisSpec BasisSpec::laguerre(double nu, const CoordinateMap& map, double eta) {
  BasisSpec s;
  s.kind = orthopoly::PolyKind::Laguerre;
  s.nu = nu;
  s.map = map;
  s.eta = eta;
  s.alpha = 0.5 * (nu + 1.0 - map.a);
  s.beta = 0.5 * (1.0 + map.b);
  check_constraints(s);
  return s;
}

BasisSpec BasisSpec::jacobi(double mu, double nu, const CoordinateMap& map,
                            double eta) {
  BasisSpec s;
  s.kind = orthopoly::PolyKind::Jacobi;
  s.mu = mu;
  s.nu = nu;
  s.map = map;
  s.eta = eta;
  s.alpha = 0.5 * (mu + 1.0 - map.a);
  s.beta = 0.5 * (nu + 1.0 - map.b);
  check_constraints(s);
  return s;
}

BasisSpec BasisSpec::laguerre_explicit(double alpha, double beta, double nu,
                                       const CoordinateMap& map, double eta) {
  BasisSpec s;
  s.kind = orthopoly::PolyKind::Laguerre;
  s.alpha = alpha;
  s.beta = beta;
  s.nu = nu;
  s.map = map;
  s.eta = eta;
  check_constraints(s);
  return s;
}

BasisSpec BasisSpec::jacobi_explicit(double alpha, double beta, double mu,
                                     double nu, const CoordinateMap& map,
                                     double eta) {
  BasisSpec s;
  s.kind = orthopoly::PolyKind::Jacobi;
  s.alpha = alpha;
  s.beta = beta;
  s.mu = mu;
  s.nu = nu;
  s.map = map;
  s.eta = eta;
  check_constraints(s);
  return s;
}

double BasisSpec::norm_constant(int n) const {
  double poly_norm = (kind == orthopoly::PolyKind::Laguerre)
                         ? orthopoly::laguerre_norm(n, nu)
                         : orthopoly::jacobi_norm(n, mu, nu);
  return poly_norm * std::sqrt(std::abs(map.kappa) / map.fold);
}

namespace {

// On the two-to-one quadratic map the envelope y^alpha = |lambda x|^{2 alpha};
// when 2 alpha is an odd integer the smooth continuation to x < 0 is the odd
// one (e.g. the nu = 1/2 basis is proportional to x, not |x|).
double parity_sign(const BasisSpec& spec, double x) {
  if (spec.map.kind != MapKind::Quadratic || x >= 0.0) return 1.0;
  double p = 2.0 * spec.alpha;
  double r = std::round(p);
  if (std::abs(p - r) < 1e-12 && std::llround(r) % 2 != 0) return -1.0;
  return 1.0;
}

}  // namespace

double basis_upper(const BasisSpec& spec, int n, double x) {
  MapEval e = spec.map.apply(x);
  const double A = spec.norm_constant(n);
  if (spec.kind == orthopoly::PolyKind::Laguerre) {
    return parity_sign(spec, x) * A * pow_safe(e.y, spec.alpha) *
           std::exp(-spec.beta * e.y) *
           orthopoly::laguerre_eval(n, spec.nu, e.y);
  }
  return A * pow_safe(1.0 - e.y, spec.alpha) * pow_safe(1.0 + e.y, spec.beta) *
         orthopoly::jacobi_eval(n, spec.mu, spec.nu, e.y);
}

double basis_upper_deriv(const BasisSpec& spec, int n, double x) {
  MapEval e = spec.map.apply(x);
  const double A = spec.norm_constant(n);
  if (spec.kind == orthopoly::PolyKind::Laguerre) {
    // d/dx = y' d/dy with y' = kappa sqrt(y); the sqrt is folded into the
    // exponents so endpoint limits stay well defined.
    double L = orthopoly::laguerre_eval(n, spec.nu, e.y);
    double Lp = orthopoly::laguerre_deriv(n, spec.nu, e.y);
    // y' = kappa sqrt(y) carries the sign of x on the two-to-one map.
    double k = spec.map.kappa;
    if (spec.map.kind == MapKind::Quadratic && x < 0.0) k = -k;
    double ex = std::exp(-spec.beta * e.y);
    double t = 0.0;
    if (spec.alpha != 0.0) t += spec.alpha * pow_safe(e.y, spec.alpha - 0.5) * L;
    t += pow_safe(e.y, spec.alpha + 0.5) * (Lp - spec.beta * L);
    return parity_sign(spec, x) * A * k * ex * t;
  }
  double P = orthopoly::jacobi_eval(n, spec.mu, spec.nu, e.y);
  double Pp = orthopoly::jacobi_deriv(n, spec.mu, spec.nu, e.y);
  double k = spec.map.kappa;
  double t = 0.0;
  if (spec.alpha != 0.0)
    t -= spec.alpha * pow_safe(1.0 - e.y, spec.alpha - 0.5) *
         pow_safe(1.0 + e.y, spec.beta + 0.5) * P;
  if (spec.beta != 0.0)
    t += spec.beta * pow_safe(1.0 - e.y, spec.alpha + 0.5) *
         pow_safe(1.0 + e.y, spec.beta - 0.5) * P;
  t += pow_safe(1.0 - e.y, spec.alpha + 0.5) * pow_safe(1.0 + e.y, spec.beta + 0.5) * Pp;
  return A * k * t;
}

double basis_lower(const BasisSpec& spec, int n, double x,
                   const std::function<double(double)>& W, double eps, double m) {
  if (eps + m == 0.0)
    throw Error(ErrorKind::SingularKineticBalance, "eps = -m");
  if (spec.eta == 0.0) return 0.0;
  double w = W ? W(x) : 0.0;
  return spec.eta / (m + eps) *
         (w * basis_upper(spec, n, x) + basis_upper_deriv(spec, n, x));
}

double gauge_away(const std::function<double(double)>& U, double x0, double x) {
  if (x == x0) return 0.0;
  return quad::integrate(U, x0, x, 1e-13, 1e-10);
}

}  // namespace tra::basis
