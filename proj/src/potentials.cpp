#include "tra/potentials.hpp"

#include <cmath>
#include <sstream>

#include "tra/errors.hpp"

namespace tra::potentials {

Potential Potential::constant(double c) { return {PotKind::Constant, c, 1.0, 0.0}; }
Potential Potential::linear(double c) { return {PotKind::Linear, c, 1.0, 0.0}; }
Potential Potential::quadratic(double c) { return {PotKind::Quadratic, c, 1.0, 0.0}; }
Potential Potential::exponential(double c, double lambda) {
  return {PotKind::Exponential, c, lambda, 0.0};
}
Potential Potential::tanh(double c, double lambda) {
  return {PotKind::Tanh, c, lambda, 0.0};
}
Potential Potential::sech_squared(double c, double lambda) {
  return {PotKind::SechSquared, c, lambda, 0.0};
}
Potential Potential::hulthen(double c, double lambda) {
  return {PotKind::Hulthen, c, lambda, 0.0};
}
Potential Potential::cosine(double c, double lambda) {
  return {PotKind::Cosine, c, lambda, 0.0};
}
Potential Potential::inverse_power(double c_over_x, double c_over_x2) {
  return {PotKind::InversePower, c_over_x, 1.0, c_over_x2};
}
Potential Potential::tan(double c, double lambda) {
  return {PotKind::Tan, c, lambda, 0.0, 0.0};
}
Potential Potential::exp_pair(double c_exp, double c_exp2, double lambda,
                              double shift) {
  return {PotKind::ExpPair, c_exp, lambda, c_exp2, shift};
}
Potential Potential::hulthen_pair(double c_h, double c_h2, double lambda,
                                  double shift) {
  return {PotKind::HulthenPair, c_h, lambda, c_h2, shift};
}

namespace {
void check_regular(const Potential& p, double x) {
  for (double s : p.singular_points())
    if (x == s)
      throw Error(ErrorKind::DomainError, "potential evaluated at a singular point");
}
}  // namespace

double Potential::eval(double x) const {
  check_regular(*this, x);
  switch (kind) {
    case PotKind::Zero: return 0.0;
    case PotKind::Constant: return c0;
    case PotKind::Linear: return c0 * x;
    case PotKind::Quadratic: return c0 * x * x;
    case PotKind::Exponential: return c0 * std::exp(-lambda * x);
    case PotKind::Tanh: return c0 * std::tanh(lambda * x);
    case PotKind::SechSquared: {
      double c = std::cosh(lambda * x);
      return c0 / (c * c);
    }
    case PotKind::Hulthen: return c0 / std::expm1(lambda * x);
    case PotKind::Cosine: return c0 * std::cos(lambda * x);
    case PotKind::InversePower: return c0 / x + c1 / (x * x);
    case PotKind::Tan: return c0 * std::tan(lambda * x);
    case PotKind::ExpPair: {
      double e = std::exp(-lambda * x);
      return c0 * e + c1 * e * e + shift;
    }
    case PotKind::HulthenPair: {
      double h = 1.0 / std::expm1(lambda * x);
      return c0 * h + c1 * h * h + shift;
    }
  }
  return 0.0;
}

double Potential::deriv(double x) const {
  check_regular(*this, x);
  switch (kind) {
    case PotKind::Zero:
    case PotKind::Constant: return 0.0;
    case PotKind::Linear: return c0;
    case PotKind::Quadratic: return 2.0 * c0 * x;
    case PotKind::Exponential: return -lambda * c0 * std::exp(-lambda * x);
    case PotKind::Tanh: {
      double t = std::tanh(lambda * x);
      return c0 * lambda * (1.0 - t * t);
    }
    case PotKind::SechSquared: {
      double c = std::cosh(lambda * x);
      return -2.0 * c0 * lambda * std::tanh(lambda * x) / (c * c);
    }
    case PotKind::Hulthen: {
      double e = std::expm1(lambda * x);
      return -c0 * lambda * (e + 1.0) / (e * e);
    }
    case PotKind::Cosine: return -c0 * lambda * std::sin(lambda * x);
    case PotKind::InversePower: return -c0 / (x * x) - 2.0 * c1 / (x * x * x);
    case PotKind::Tan: {
      double c = std::cos(lambda * x);
      return c0 * lambda / (c * c);
    }
    case PotKind::ExpPair: {
      double e = std::exp(-lambda * x);
      return -lambda * (c0 * e + 2.0 * c1 * e * e);
    }
    case PotKind::HulthenPair: {
      double e = std::expm1(lambda * x);
      double hp = -lambda * (e + 1.0) / (e * e);  // d/dx 1/(e^{lx}-1)
      double h = 1.0 / e;
      return (c0 + 2.0 * c1 * h) * hp;
    }
  }
  return 0.0;
}

bool Potential::is_zero() const {
  if (kind == PotKind::Zero) return true;
  if (kind == PotKind::InversePower || kind == PotKind::ExpPair ||
      kind == PotKind::HulthenPair)
    return c0 == 0.0 && c1 == 0.0 && shift == 0.0;
  return c0 == 0.0;
}

std::vector<double> Potential::singular_points() const {
  switch (kind) {
    case PotKind::Hulthen:
    case PotKind::HulthenPair:
    case PotKind::InversePower: return {0.0};
    case PotKind::Tan: {
      // Poles bracketing the principal branch.
      double p = 0.5 * 3.14159265358979323846 / lambda;
      return {-p, p};
    }
    default: return {};
  }
}

std::string Potential::describe() const {
  std::ostringstream os;
  switch (kind) {
    case PotKind::Zero: os << "0"; break;
    case PotKind::Constant: os << c0; break;
    case PotKind::Linear: os << c0 << "*x"; break;
    case PotKind::Quadratic: os << c0 << "*x^2"; break;
    case PotKind::Exponential: os << c0 << "*exp(-" << lambda << "*x)"; break;
    case PotKind::Tanh: os << c0 << "*tanh(" << lambda << "*x)"; break;
    case PotKind::SechSquared: os << c0 << "/cosh^2(" << lambda << "*x)"; break;
    case PotKind::Hulthen: os << c0 << "/(exp(" << lambda << "*x)-1)"; break;
    case PotKind::Cosine: os << c0 << "*cos(" << lambda << "*x)"; break;
    case PotKind::InversePower: os << c0 << "/x + " << c1 << "/x^2"; break;
    case PotKind::Tan: os << c0 << "*tan(" << lambda << "*x)"; break;
    case PotKind::ExpPair:
      os << c0 << "*exp(-" << lambda << "*x) + " << c1 << "*exp(-" << 2 * lambda
         << "*x) + " << shift;
      break;
    case PotKind::HulthenPair:
      os << c0 << "*h + " << c1 << "*h^2 + " << shift << ", h=1/(exp(" << lambda
         << "*x)-1)";
      break;
  }
  return os.str();
}

PotentialConfig PotentialConfig::ingest() const {
  PotentialConfig out = *this;
  out.U.reset();
  return out;
}

const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::SpinSymmetric: return "spin-symmetric";
    case SymmetryClass::PseudospinSymmetric: return "pseudospin-symmetric";
    case SymmetryClass::ScalarOnly: return "scalar-only";
    case SymmetryClass::PseudoscalarOnly: return "pseudoscalar-only";
    case SymmetryClass::General: return "general";
  }
  return "?";
}

namespace {

// Pointwise equality of f and sign*g on a sample grid of the domain,
// avoiding singular points. Families with identical values classify
// identically regardless of how their parameters are labeled.
bool pointwise_equal(const Potential& f, const Potential& g, double sign,
                     const Interval& dom) {
  double lo = std::max(dom.lo, -30.0), hi = std::min(dom.hi, 30.0);
  const int n = 97;
  for (int i = 0; i <= n; ++i) {
    double x = lo + (hi - lo) * i / n;
    bool singular = false;
    for (double s : f.singular_points())
      if (std::abs(x - s) < 1e-6) singular = true;
    for (double s : g.singular_points())
      if (std::abs(x - s) < 1e-6) singular = true;
    if (singular) continue;
    double a = f.eval(x), b = sign * g.eval(x);
    if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a) + std::abs(b))) return false;
  }
  return true;
}

}  // namespace

SymmetryClass classify(const PotentialConfig& config) {
  const auto& c = config;
  bool v0 = c.V.is_zero(), s0 = c.S.is_zero(), w0 = c.W.is_zero();
  if (v0 && w0) return SymmetryClass::ScalarOnly;
  if (v0 && s0) return SymmetryClass::PseudoscalarOnly;
  if (pointwise_equal(c.V, c.S, 1.0, c.x_domain)) return SymmetryClass::SpinSymmetric;
  if (pointwise_equal(c.V, c.S, -1.0, c.x_domain))
    return SymmetryClass::PseudospinSymmetric;
  return SymmetryClass::General;
}

EffectiveSchrodinger reduce(const PotentialConfig& config, SymmetryClass cls,
                            SignBranch sign) {
  EffectiveSchrodinger eff;
  eff.sign = sign;
  eff.x_domain = config.x_domain;
  const double m = config.m;
  const double sgn = (sign == SignBranch::Plus) ? 1.0 : -1.0;
  const Potential S = config.S, V = config.V, W = config.W;

  switch (cls) {
    case SymmetryClass::ScalarOnly:
      // F = m + S; each rotated component satisfies u = (F^2 +- F')/2 with
      // E = eps^2/2.
      eff.component = (sign == SignBranch::Plus) ? Component::Upper : Component::Lower;
      eff.u = [S, m, sgn](double x, double) {
        double F = m + S.eval(x);
        return 0.5 * (F * F + sgn * S.deriv(x));
      };
      eff.e_of_eps = [](double eps) { return 0.5 * eps * eps; };
      eff.eps_dependent = false;
      break;
    case SymmetryClass::PseudoscalarOnly:
      eff.component = (sign == SignBranch::Plus) ? Component::Upper : Component::Lower;
      eff.u = [W, sgn](double x, double) {
        double w = W.eval(x);
        return 0.5 * (w * w + sgn * W.deriv(x));
      };
      eff.e_of_eps = [m](double eps) { return 0.5 * (eps * eps - m * m); };
      eff.eps_dependent = false;
      break;
    case SymmetryClass::SpinSymmetric:
      eff.component = Component::Upper;
      eff.u = [W, V, m](double x, double eps) {
        double w = W.eval(x);
        return 0.5 * (w * w - W.deriv(x)) + (eps + m) * V.eval(x);
      };
      eff.e_of_eps = [m](double eps) { return 0.5 * (eps * eps - m * m); };
      eff.eps_dependent = !V.is_zero();
      break;
    case SymmetryClass::PseudospinSymmetric:
      eff.component = Component::Lower;
      eff.u = [W, V, m](double x, double eps) {
        double w = W.eval(x);
        return 0.5 * (w * w + W.deriv(x)) + (eps - m) * V.eval(x);
      };
      eff.e_of_eps = [m](double eps) { return 0.5 * (eps * eps - m * m); };
      eff.eps_dependent = !V.is_zero();
      break;
    case SymmetryClass::General:
      throw Error(ErrorKind::NotReducible,
                  "no symmetry: use the tridiagonal wave-operator route");
  }
  return eff;
}

}  // namespace tra::potentials
