#include "tra/jmatrix.hpp"

#include <cmath>
#include <string>

#include "tra/errors.hpp"
#include "tra/quadrature.hpp"

namespace tra::jmatrix {

using basis::BasisSpec;
using basis::MapKind;
using orthopoly::PolyKind;
using potentials::PotentialConfig;
using potentials::PotKind;
using potentials::Potential;

double LinearityRule::rho(double eps) const {
  return (p1 + (eps + m) * q1 / eta) / kappa2 + y_term;
}

double LinearityRule::sigma(double eps) const {
  return (p0 + (eps + m) * q0 / eta + (m * m - eps * eps) / eta) / kappa2 +
         const_term;
}

namespace {

struct LinearPair {
  double c_const;
  double c_y;
};

// Decomposes a potential family as c_const + c_y * y for the given map, or
// reports the offending term.
LinearPair decompose(const Potential& p, const BasisSpec& spec, const char* slot) {
  const double kappa = spec.map.kappa;
  if (p.is_zero()) return {0.0, 0.0};
  if (spec.map.kind == MapKind::Quadratic) {
    switch (p.kind) {
      case PotKind::Constant: return {p.c0, 0.0};
      case PotKind::Quadratic: return {0.0, 4.0 * p.c0 / (kappa * kappa)};
      default: break;
    }
  } else if (spec.map.kind == MapKind::Cosine) {
    switch (p.kind) {
      case PotKind::Constant: return {p.c0, 0.0};
      case PotKind::Cosine:
        if (std::abs(p.lambda - spec.map.lambda) < 1e-12) return {0.0, p.c0};
        throw Error(ErrorKind::NotTridiagonalizable,
                    std::string(slot) + ": cosine frequency does not match the map");
      default: break;
    }
  }
  throw Error(ErrorKind::NotTridiagonalizable,
              std::string(slot) + " (" + p.describe() +
                  ") is not linear in the transformed coordinate");
}

// W^2 - W' as c_const + c_y * y.
LinearPair decompose_pseudoscalar(const Potential& w, const BasisSpec& spec) {
  const double kappa = spec.map.kappa;
  if (w.is_zero()) return {0.0, 0.0};
  if (w.kind == PotKind::Constant) return {w.c0 * w.c0, 0.0};
  if (spec.map.kind == MapKind::Quadratic && w.kind == PotKind::Linear)
    return {-w.c0, 4.0 * w.c0 * w.c0 / (kappa * kappa)};
  throw Error(ErrorKind::NotTridiagonalizable,
              "W (" + w.describe() + "): W^2 - W' is not linear in the transformed coordinate");
}

double probe_g(const PotentialConfig& config, const BasisSpec& spec, double eps,
               double x) {
  auto e = spec.map.apply(x);
  const double eta = spec.eta, m = config.m;
  double w = config.W.eval(x), wp = config.W.deriv(x);
  double vs = config.V.eval(x) + config.S.eval(x);
  const double a = spec.map.a, b = spec.map.b;
  const double al = spec.alpha, be = spec.beta;
  if (spec.kind == PolyKind::Laguerre) {
    double t = w * w - wp + (eps + m) / eta * (vs + m - eps);
    return e.y / (e.yp * e.yp) * t - al * (al + a - 1.0) / e.y +
           2.0 * al * be + a * be - b * al - be * (be - b) * e.y;
  }
  double t = w * w - wp + (eps + m) * vs / eta + (m * m - eps * eps) / eta;
  return (1.0 - e.y * e.y) / (e.yp * e.yp) * t -
         (be * (be + b - 1.0) * (1.0 - e.y) / (1.0 + e.y) +
          al * (al + a - 1.0) * (1.0 + e.y) / (1.0 - e.y) - 2.0 * al * be -
          b * al - a * be);
}

}  // namespace

LinearityResult linearity(const PotentialConfig& config, const BasisSpec& spec,
                          double eps) {
  const double a = spec.map.a, b = spec.map.b;
  const double al = spec.alpha, be = spec.beta;

  // Envelope exponents must kill the singular 1/y or (1+-y)/(1-+y) terms.
  if (std::abs(al * (al + a - 1.0)) > 1e-12)
    throw Error(ErrorKind::NotTridiagonalizable,
                "envelope exponent alpha leaves a singular term (alpha*(alpha+a-1) != 0)");
  if (spec.kind == PolyKind::Jacobi && std::abs(be * (be + b - 1.0)) > 1e-12)
    throw Error(ErrorKind::NotTridiagonalizable,
                "envelope exponent beta leaves a singular term (beta*(beta+b-1) != 0)");

  LinearityRule rule;
  rule.eta = spec.eta;
  rule.m = config.m;
  rule.kappa2 = spec.map.kappa * spec.map.kappa;
  rule.jacobi = (spec.kind == PolyKind::Jacobi);

  LinearPair ps = decompose_pseudoscalar(config.W, spec);
  LinearPair vs_v = decompose(config.V, spec, "V");
  LinearPair vs_s = decompose(config.S, spec, "S");
  rule.p0 = ps.c_const;
  rule.p1 = ps.c_y;
  rule.q0 = vs_v.c_const + vs_s.c_const;
  rule.q1 = vs_v.c_y + vs_s.c_y;
  if (rule.jacobi) {
    rule.const_term = 2.0 * al * be + b * al + a * be;
    rule.y_term = 0.0;
  } else {
    rule.const_term = 2.0 * al * be + a * be - b * al;
    rule.y_term = -be * (be - b);
  }

  LinearityResult res;
  res.rule = rule;
  res.rho = rule.rho(eps);
  res.sigma = rule.sigma(eps);

  // 64-point probe over the interior of the map image.
  double worst = 0.0;
  for (int i = 1; i <= 64; ++i) {
    double x;
    if (spec.map.kind == MapKind::Quadratic) {
      double xmax = 6.0 / spec.map.lambda;
      x = xmax * i / 65.0;
    } else {
      x = spec.map.x_min + (spec.map.x_max - spec.map.x_min) * i / 65.0;
    }
    auto e = spec.map.apply(x);
    double g = probe_g(config, spec, eps, x);
    worst = std::max(worst, std::abs(g - (res.rho * e.y + res.sigma)));
  }
  res.residual_bound = worst;
  if (worst > 1e-9)
    throw Error(ErrorKind::LinearityCheckFailed,
                "probe residual " + std::to_string(worst));
  return res;
}

TridiagonalBands bands_laguerre(const LinearityResult& lin, const BasisSpec& spec,
                                double m) {
  if (spec.kind != PolyKind::Laguerre)
    throw Error(ErrorKind::InvalidBasis, "bands_laguerre needs a Laguerre spec");
  TridiagonalBands bands;
  bands.spec = spec;
  bands.eta = spec.eta;
  bands.m = m;
  const double eta = spec.eta, nu = spec.nu;
  const double kappa2 = spec.map.kappa * spec.map.kappa;
  LinearityRule rule = lin.rule;
  auto pref = [eta, kappa2, m](double eps) {
    if (eps + m == 0.0)
      throw Error(ErrorKind::SingularPrefactor, "eps = -m");
    return eta * kappa2 / (eps + m);
  };
  bands.d = [rule, pref, nu](int n, double eps) {
    return pref(eps) *
           ((2.0 * n + nu + 1.0) * rule.rho(eps) + rule.sigma(eps) + n);
  };
  bands.c = [rule, pref, nu](int n, double eps) {
    return -pref(eps) * rule.rho(eps) * std::sqrt((n + 1.0) * (n + nu + 1.0));
  };
  return bands;
}

TridiagonalBands bands_jacobi(const LinearityResult& lin, const BasisSpec& spec,
                              double m) {
  if (spec.kind != PolyKind::Jacobi)
    throw Error(ErrorKind::InvalidBasis, "bands_jacobi needs a Jacobi spec");
  TridiagonalBands bands;
  bands.spec = spec;
  bands.eta = spec.eta;
  bands.m = m;
  const double eta = spec.eta, mu = spec.mu, nu = spec.nu;
  const double kappa2 = spec.map.kappa * spec.map.kappa;
  LinearityRule rule = lin.rule;
  auto pref = [eta, kappa2, m](double eps) {
    if (eps + m == 0.0)
      throw Error(ErrorKind::SingularPrefactor, "eps = -m");
    return eta * kappa2 / (eps + m);
  };
  bands.d = [rule, pref, mu, nu](int n, double eps) {
    double s = mu + nu;
    // The n = 0 coefficient is evaluated in its cancelled form so s = 0
    // (mu = -nu) stays finite.
    double coef = (n == 0)
                      ? (nu - mu) / (s + 2.0)
                      : (nu * nu - mu * mu) /
                            ((2.0 * n + s) * (2.0 * n + s + 2.0));
    return pref(eps) *
           (n * (n + s + 1.0) + rule.sigma(eps) + rule.rho(eps) * coef);
  };
  bands.c = [rule, pref, mu, nu](int n, double eps) {
    double s = mu + nu;
    double amp;
    if (n == 0) {
      // (n+s+1)/(2n+s+1) cancelled at n = 0 for s = -1.
      amp = 2.0 / (s + 2.0) * std::sqrt((mu + 1.0) * (nu + 1.0) / (s + 3.0));
    } else {
      double t = 2.0 * n + s;
      amp = 2.0 / (t + 2.0) *
            std::sqrt((n + 1.0) * (n + mu + 1.0) * (n + nu + 1.0) *
                      (n + s + 1.0) / ((t + 1.0) * (t + 3.0)));
    }
    return pref(eps) * rule.rho(eps) * amp;
  };
  return bands;
}

TridiagonalBands bands(const PotentialConfig& config, const BasisSpec& spec) {
  LinearityResult lin = linearity(config, spec, 0.5 * std::abs(config.m) + 0.75);
  return (spec.kind == PolyKind::Laguerre) ? bands_laguerre(lin, spec, config.m)
                                           : bands_jacobi(lin, spec, config.m);
}

double element_quadrature(const PotentialConfig& config, const BasisSpec& spec,
                          double eps, int n, int m, ElementForm form) {
  const double eta = spec.eta, mass = config.m;
  if (eps + mass == 0.0)
    throw Error(ErrorKind::SingularPrefactor, "eps = -m");

  auto phi_n = [&](double x) { return basis::basis_upper(spec, n, x); };
  auto phi_m = [&](double x) { return basis::basis_upper(spec, m, x); };
  auto dphi_n = [&](double x) { return basis::basis_upper_deriv(spec, n, x); };
  auto dphi_m = [&](double x) { return basis::basis_upper_deriv(spec, m, x); };

  auto integrand = [&](double x) {
    double w = config.W.eval(x), wp = config.W.deriv(x);
    double qplus = config.V.eval(x) + config.S.eval(x) + mass - eps;
    double pn = phi_n(x), pm = phi_m(x), dn = dphi_n(x), dm = dphi_m(x);
    if (form == ElementForm::Reduced) {
      return eta / (eps + mass) * (dn * dm + (w * w - wp) * pn * pm) +
             qplus * pn * pm;
    }
    double qcoef = (2.0 * eta - eta * eta) / (eps + mass);
    double vms = config.V.eval(x) - config.S.eval(x);
    double kb = eta / (eps + mass);
    return qplus * pn * pm + qcoef * (dn * dm + (w * w - wp) * pn * pm) +
           kb * kb * vms * (w * pn + dn) * (w * pm + dm);
  };

  if (spec.map.kind == MapKind::Quadratic) {
    // Truncate where the Gaussian envelope is negligible for the degrees used.
    double ymax = 64.0 + 4.0 * (n + m + 6);
    double X = 2.0 * std::sqrt(ymax) / std::abs(spec.map.kappa);
    return quad::integrate(integrand, -X, X, 1e-13, 1e-10);
  }
  return quad::integrate(integrand, spec.map.x_min, spec.map.x_max, 1e-13, 1e-10);
}

double element_quadrature_general(const PotentialConfig& config,
                                  const BasisSpec& spec, double eps, int n, int m,
                                  const LowerRule& lower) {
  const double mass = config.m;
  // <n|Q+|m> + <n-|Q-|m-> + <n|(-d/dx+W)|m-> + <n-|(d/dx+W)|m>, with the
  // derivative cross terms integrated by parts onto the upper components.
  auto integrand = [&](double x) {
    double w = config.W.eval(x);
    double v = config.V.eval(x), s = config.S.eval(x);
    double qp = v + s + mass - eps;
    double qm = v - s - mass - eps;
    double pn = basis::basis_upper(spec, n, x);
    double pm = basis::basis_upper(spec, m, x);
    double dn = basis::basis_upper_deriv(spec, n, x);
    double dm = basis::basis_upper_deriv(spec, m, x);
    double ln = lower(n, x), lm = lower(m, x);
    return qp * pn * pm + qm * ln * lm + (dn + w * pn) * lm + ln * (dm + w * pm);
  };
  if (spec.map.kind == MapKind::Quadratic) {
    double ymax = 64.0 + 4.0 * (n + m + 6);
    double X = 2.0 * std::sqrt(ymax) / std::abs(spec.map.kappa);
    return quad::integrate(integrand, -X, X, 1e-13, 1e-10);
  }
  return quad::integrate(integrand, spec.map.x_min, spec.map.x_max, 1e-13, 1e-10);
}

}  // namespace tra::jmatrix
