#include "tra/graphene.hpp"

#include <cmath>

#include "tra/catalog.hpp"
#include "tra/errors.hpp"

namespace tra::graphene {

using potentials::Potential;
using potentials::PotentialConfig;

namespace {

void check(const FieldProfile& p) {
  switch (p.family) {
    case FieldFamily::Constant:
    case FieldFamily::InverseSquare:
      break;
    default:
      if (p.alpha <= 0.0)
        throw Error(ErrorKind::InvalidProfile, "field profile requires alpha > 0");
  }
}

// Dimensionless coupling e B0 / (c hbar); all internal computation is
// dimensionless, physical units enter only at output.
double coupling(const FieldProfile& p) { return p.scales.e_over_chbar * p.B0; }

}  // namespace

double field_value(const FieldProfile& p, double x) {
  switch (p.family) {
    case FieldFamily::Constant: return p.B0;
    case FieldFamily::InverseSquare: return p.B0 / (x * x);
    case FieldFamily::CoshBarrier: {
      double c = std::cosh(p.alpha * x);
      return p.B0 / (c * c);
    }
    case FieldFamily::ExpDecay: return p.B0 * std::exp(-p.alpha * x);
    case FieldFamily::Hulthen: {
      double e = std::expm1(p.alpha * x);
      return p.B0 * (e + 1.0) / (e * e);
    }
    case FieldFamily::SecSquared: {
      double c = std::cos(p.alpha * x);
      return p.B0 / (c * c);
    }
    case FieldFamily::SinhSquared: {
      double s = std::sinh(p.alpha * x);
      return p.B0 / (s * s);
    }
  }
  throw Error(ErrorKind::InvalidProfile, "unknown field family");
}

PotentialConfig field_to_scalar(const FieldProfile& p) {
  check(p);
  const double g = coupling(p);
  const double a = p.alpha;
  PotentialConfig cfg;
  cfg.m = p.k;
  switch (p.family) {
    case FieldFamily::Constant:
      cfg.S = Potential::linear(g);
      break;
    case FieldFamily::InverseSquare:
      // A_y = -B0/x, so S = gamma/x with gamma = -e B0/(c hbar).
      cfg.S = Potential::inverse_power(-g, 0.0);
      cfg.x_domain = {0.0, 1e9};
      break;
    case FieldFamily::CoshBarrier:
      cfg.S = Potential::tanh(g / a, a);
      break;
    case FieldFamily::ExpDecay:
      cfg.S = Potential::exponential(-g / a, a);
      break;
    case FieldFamily::Hulthen:
      // A_y = -(B0/alpha)/(e^{alpha x}-1).
      cfg.S = Potential::hulthen(-g / a, a);
      cfg.x_domain = {0.0, 1e9};
      break;
    case FieldFamily::SecSquared: {
      cfg.S = Potential::tan(g / a, a);
      double half = 0.5 * 3.14159265358979323846 / a;
      cfg.x_domain = {-half, half};
      break;
    }
    case FieldFamily::SinhSquared: {
      // S = S0 coth(alpha x) with S0 = -e B0/(c hbar alpha), written as
      // S0 + 2 S0 / (e^{2 alpha x} - 1).
      double S0 = -g / a;
      cfg.S = Potential::hulthen_pair(2.0 * S0, 0.0, 2.0 * a, S0);
      cfg.x_domain = {0.0, 1e9};
      break;
    }
  }
  return cfg;
}

std::string mapped_entry_id(FieldFamily family) {
  switch (family) {
    case FieldFamily::Constant: return "graphene_constant_field";
    case FieldFamily::InverseSquare: return "graphene_inverse_square_field";
    case FieldFamily::CoshBarrier: return "graphene_cosh_barrier";
    case FieldFamily::ExpDecay: return "graphene_exp_barrier";
    case FieldFamily::Hulthen: return "graphene_hulthen_barrier";
    case FieldFamily::SecSquared: return "graphene_sec2_field";
    case FieldFamily::SinhSquared: return "graphene_sinh2_field";
  }
  throw Error(ErrorKind::InvalidProfile, "unknown field family");
}

double landau_spectrum(const FieldProfile& p, int n, solver::Branch branch) {
  check(p);
  const double g = coupling(p);
  const auto& entry = catalog::find(mapped_entry_id(p.family));
  catalog::Params params;
  if (p.B0 == 0.0) {
    // Free transverse motion: eps^2 = k^2.
    double eps = std::abs(p.k);
    return p.scales.hbar * p.scales.v_f *
           (branch == solver::Branch::Positive ? eps : -eps);
  }
  switch (p.family) {
    case FieldFamily::Constant:
      params.set("k", p.k);
      params.set("B0", g);
      break;
    case FieldFamily::InverseSquare:
      params.set("k", p.k);
      params.set("B0", g);
      break;
    case FieldFamily::CoshBarrier:
      params.set("k", p.k);
      params.set("S0", g / p.alpha);
      params.set("alpha", p.alpha);
      break;
    case FieldFamily::ExpDecay:
      params.set("k", p.k);
      params.set("S0", -g / p.alpha);
      params.set("alpha", p.alpha);
      break;
    case FieldFamily::Hulthen:
      params.set("k", p.k);
      params.set("S0", -g / p.alpha);
      params.set("alpha", p.alpha);
      break;
    case FieldFamily::SecSquared:
    case FieldFamily::SinhSquared:
      params.set("k", p.k);
      params.set("B0", g);
      params.set("alpha", p.alpha);
      break;
  }
  double eps = catalog::spectrum(entry, params, n, branch);
  return p.scales.hbar * p.scales.v_f * eps;
}

}  // namespace tra::graphene
