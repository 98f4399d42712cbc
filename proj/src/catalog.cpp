#include "tra/catalog.hpp"

#include <cmath>
#include <string>

#include "tra/basis.hpp"
#include "tra/errors.hpp"
#include "tra/orthopoly.hpp"

namespace tra::catalog {

using basis::BasisSpec;
using basis::CoordinateMap;
using basis::MapKind;
using orthopoly::jacobi_deriv;
using orthopoly::jacobi_eval;
using orthopoly::laguerre_deriv;
using orthopoly::laguerre_eval;
using potentials::Interval;
using potentials::Potential;
using potentials::PotentialConfig;
using solver::Branch;
using spinor::ComponentRule;

double Params::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end())
    throw Error(ErrorKind::MissingParameter, "parameter '" + name + "' not set");
  return it->second;
}

double Params::get(const std::string& name, double fallback) const {
  auto it = values_.find(name);
  return it == values_.end() ? fallback : it->second;
}

namespace {

double pow_safe(double base, double p) {
  if (base <= 0.0) {
    if (base < -1e-12) throw Error(ErrorKind::DomainError, "negative base");
    if (p > 0.0) return 0.0;
    if (p == 0.0) return 1.0;
    throw Error(ErrorKind::LimitUndefined, "0^negative in a wavefunction envelope");
  }
  return std::pow(base, p);
}

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorKind::InvalidBoundState, why);
}

double hermite(int n, double z) {
  if (n == 0) return 1.0;
  double pm = 1.0, p = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    double pn = 2.0 * z * p - 2.0 * k * pm;
    pm = p;
    p = pn;
  }
  return p;
}

// Jacobi envelope on y = tanh(alpha x): (1-y)^(a/2) (1+y)^(b/2) P_n^(a,b)(y).
ComponentRule tanh_jacobi_rule(double alpha, double a, double b, int n) {
  auto val = [=](double x) {
    double y = std::tanh(alpha * x);
    return pow_safe(1.0 - y, 0.5 * a) * pow_safe(1.0 + y, 0.5 * b) *
           jacobi_eval(n, a, b, y);
  };
  auto der = [=](double x) {
    double y = std::tanh(alpha * x);
    double P = jacobi_eval(n, a, b, y);
    double Pp = jacobi_deriv(n, a, b, y);
    double t = -0.5 * a * pow_safe(1.0 - y, 0.5 * a) * pow_safe(1.0 + y, 0.5 * b + 1.0) * P +
               0.5 * b * pow_safe(1.0 - y, 0.5 * a + 1.0) * pow_safe(1.0 + y, 0.5 * b) * P +
               pow_safe(1.0 - y, 0.5 * a + 1.0) * pow_safe(1.0 + y, 0.5 * b + 1.0) * Pp;
    return alpha * t;
  };
  return {val, der};
}

// Morse envelope on y = mu e^{-alpha x}: y^(nu/2) e^{-y/2} L_n^nu(y).
ComponentRule morse_rule(double alpha, double mu, double nu, int n) {
  auto val = [=](double x) {
    double y = mu * std::exp(-alpha * x);
    return pow_safe(y, 0.5 * nu) * std::exp(-0.5 * y) * laguerre_eval(n, nu, y);
  };
  auto der = [=](double x) {
    double y = mu * std::exp(-alpha * x);
    double L = laguerre_eval(n, nu, y);
    double Lp = laguerre_deriv(n, nu, y);
    return -alpha * pow_safe(y, 0.5 * nu) * std::exp(-0.5 * y) *
           ((0.5 * nu - 0.5 * y) * L + y * Lp);
  };
  return {val, der};
}

// Jacobi envelope on z = 1 - 2 e^{-lam x}: (1-z)^p (1+z)^q P_n^(2p, 2q-1)(z).
// The asymmetric measure (y' = lam(1-z)) shifts the first polynomial index
// to 2p, one above the naive envelope pairing.
ComponentRule shifted_exp_jacobi_rule(double lam, double p, double q, int n) {
  const double a = 2.0 * p, b = 2.0 * q - 1.0;
  auto val = [=](double x) {
    double e = std::exp(-lam * x);
    double z = 1.0 - 2.0 * e;
    return pow_safe(2.0 * e, p) * pow_safe(1.0 + z, q) * jacobi_eval(n, a, b, z);
  };
  auto der = [=](double x) {
    double e = std::exp(-lam * x);
    double z = 1.0 - 2.0 * e;
    double P = jacobi_eval(n, a, b, z);
    double Pp = jacobi_deriv(n, a, b, z);
    double one_m = 2.0 * e;  // 1 - z
    double t = -p * pow_safe(one_m, p) * pow_safe(1.0 + z, q) * P +
               q * pow_safe(one_m, p + 1.0) * pow_safe(1.0 + z, q - 1.0) * P +
               pow_safe(one_m, p + 1.0) * pow_safe(1.0 + z, q) * Pp;
    return lam * t;
  };
  return {val, der};
}

// Radial Coulomb-type envelope: x^s e^{-kap x} L_n^nu(2 kap x).
ComponentRule coulomb_rule(double s, double kap, double nu, int n) {
  auto val = [=](double x) {
    return pow_safe(x, s) * std::exp(-kap * x) * laguerre_eval(n, nu, 2.0 * kap * x);
  };
  auto der = [=](double x) {
    double L = laguerre_eval(n, nu, 2.0 * kap * x);
    double Lp = laguerre_deriv(n, nu, 2.0 * kap * x);
    return std::exp(-kap * x) *
           (s * pow_safe(x, s - 1.0) * L - kap * pow_safe(x, s) * L +
            2.0 * kap * pow_safe(x, s) * Lp);
  };
  return {val, der};
}

// Oscillator envelope (lam x)^p e^{-lam^2 x^2 / 2} L_n^nu(lam^2 x^2) with the
// smooth parity continuation (p is 0 or 1 in every registered use).
ComponentRule oscillator_rule(double lam, double p, double nu, int n) {
  int ip = static_cast<int>(std::lround(p));
  auto xp = [=](double u) { return ip == 0 ? 1.0 : (ip == 1 ? u : std::pow(u, ip)); };
  auto val = [=](double x) {
    double u = lam * x, y = u * u;
    return xp(u) * std::exp(-0.5 * y) * laguerre_eval(n, nu, y);
  };
  auto der = [=](double x) {
    double u = lam * x, y = u * u;
    double L = laguerre_eval(n, nu, y);
    double Lp = laguerre_deriv(n, nu, y);
    double dxp = ip == 0 ? 0.0 : ip * (ip == 1 ? 1.0 : std::pow(u, ip - 1));
    double t = dxp * L - xp(u) * u * L + 2.0 * xp(u) * u * Lp;
    return lam * std::exp(-0.5 * y) * t;
  };
  return {val, der};
}

// Polynomial tower of the trigonometric barrier, built by the
// supersymmetric ladder: chi_n = A_0^+ ... A_{n-1}^+ chi_0^{(n)} where the
// k-th partner has p_k = p + k and slope tau_k = -btilde/p_k. Each raising
// step maps the polynomial part f(u), u = tan(lam x), of a state with
// prefactor parameters (s, tau) as
//   f -> (s + p_k) u f - (tau + tau_k) f - (1 + u^2) f'.
std::vector<double> trig_tower_coeffs(int n, double p, double btilde) {
  const double s = p + n, tau = -btilde / s;
  std::vector<double> f{1.0};
  for (int k = n - 1; k >= 0; --k) {
    double pk = p + k;
    double tauk = -btilde / pk;
    std::vector<double> g(f.size() + 1, 0.0);
    for (std::size_t j = 0; j < f.size(); ++j) {
      g[j + 1] += (s + pk) * f[j];                 // (s + p_k) u f
      g[j] -= (tau + tauk) * f[j];                 // -(tau + tau_k) f
      if (j >= 1) {
        g[j - 1] -= j * f[j];                      // -f'
        g[j + 1] -= j * f[j];                      // -u^2 f'
      }
    }
    f = std::move(g);
  }
  double lead = f.back();
  if (lead != 0.0)
    for (auto& c : f) c /= lead;
  return f;
}

ComponentRule trig_tower_rule(double lam, double p, double btilde, int n) {
  const double s = p + n, tau = -btilde / s;
  auto coeffs = trig_tower_coeffs(n, p, btilde);
  auto poly = [coeffs](double u) {
    double v = 0.0;
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
      v = v * u + coeffs[j];
    return v;
  };
  auto dpoly = [coeffs](double u) {
    double v = 0.0;
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 1; --j)
      v = v * u + j * coeffs[j];
    return v;
  };
  auto val = [=](double x) {
    double c = std::cos(lam * x), u = std::tan(lam * x);
    return pow_safe(c, s) * std::exp(tau * lam * x) * poly(u);
  };
  auto der = [=](double x) {
    double c = std::cos(lam * x), u = std::tan(lam * x);
    double f = poly(u), fp = dpoly(u);
    return lam * pow_safe(c, s) * std::exp(tau * lam * x) *
           ((-s * u + tau) * f + (1.0 + u * u) * fp);
  };
  return {val, der};
}

// Relative residual of -1/2 chi'' + (u - E) chi = 0 for a candidate rule;
// used to pick between ambiguous exponent assignments.
double effective_residual(const potentials::EffectiveSchrodinger& eff,
                          const ComponentRule& rule, double eps, Interval dom) {
  double num = 0.0, den = 0.0;
  double h = (dom.hi - dom.lo) / 4000.0;
  for (int i = 1; i <= 48; ++i) {
    double x = dom.lo + (dom.hi - dom.lo) * i / 49.0;
    double chi = rule.value(x);
    double chipp = (-rule.value(x - 2 * h) + 16 * rule.value(x - h) - 30 * chi +
                    16 * rule.value(x + h) - rule.value(x + 2 * h)) /
                   (12 * h * h);
    double r = -0.5 * chipp + (eff.u(x, eps) - eff.e_of_eps(eps)) * chi;
    num += r * r;
    den += chi * chi + 1e-300;
  }
  return std::sqrt(num / den);
}

PotentialConfig scalar_only(double k, const Potential& S) {
  PotentialConfig cfg;
  cfg.m = k;
  cfg.S = S;
  return cfg;
}

double branch_sign(Branch b) { return b == Branch::Positive ? 1.0 : -1.0; }

// All sign changes of g on [lo, hi], bisection-refined. Implicit level
// conditions of the eps-dependent wells can hold at more than one energy.
std::vector<double> all_roots(const std::function<double(double)>& g, double lo,
                              double hi, int grid_points = 600) {
  std::vector<double> roots;
  double prev_x = lo, prev_f = g(lo);
  for (int i = 1; i <= grid_points; ++i) {
    double x = lo + (hi - lo) * i / grid_points;
    double fx = g(x);
    if (prev_f == 0.0) roots.push_back(prev_x);
    if (prev_f * fx < 0.0) {
      double a = prev_x, b = x, fa = prev_f;
      for (int it = 0; it < 90 && b - a > 1e-13 * (1.0 + std::abs(a)); ++it) {
        double m = 0.5 * (a + b), fm = g(m);
        if ((fm > 0.0) == (fa > 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Hyperbolic magnetic barrier: S = S0 tanh(alpha x), mass slot k.
// ---------------------------------------------------------------------------

struct CoshBarrierLevels {
  double gamma_abs, c;  // c = k S0 / alpha^2
  double alpha, k, S0;
  void init(const Params& p) {
    k = p.at("k");
    S0 = p.at("S0");
    alpha = p.at("alpha");
    double g2 = S0 * (S0 - alpha) / (alpha * alpha) + 0.25;
    if (g2 <= 0.0) invalid("S0(S0-alpha) > -alpha^2/4 violated");
    gamma_abs = std::sqrt(g2);
    c = k * S0 / (alpha * alpha);
  }
  double g(int n) const { return n + 0.5 - gamma_abs; }
  void check(int n) const {
    if (g(n) >= 0.0) invalid("level index exceeds the well capacity (n+1/2 >= |gamma|)");
    if (g(n) * g(n) <= std::abs(c))
      invalid("level beyond the last bound state (decay exponents not real)");
  }
  double eps2(int n) const {
    double gn = g(n);
    return k * k + S0 * S0 -
           alpha * alpha * (gn * gn + c * c / (gn * gn));
  }
  double eprime(int n) const { return 0.5 * (eps2(n) - k * k - S0 * S0); }
};

Entry make_cosh_barrier() {
  Entry e;
  e.id = "graphene_cosh_barrier";
  e.title = "hyperbolic magnetic barrier (tanh scalar coupling)";
  e.note = "exponent pair chosen by residual between the two sign assignments";
  e.cls = potentials::SymmetryClass::ScalarOnly;
  e.param_names = {"k", "S0", "alpha"};
  e.defaults = Params{{"k", 0.2}, {"S0", 4.0}, {"alpha", 0.7}};
  e.config = [](const Params& p) {
    return scalar_only(p.at("k"), Potential::tanh(p.at("S0"), p.at("alpha")));
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    CoshBarrierLevels lv;
    lv.init(p);
    lv.check(n);
    double e2 = lv.eps2(n);
    if (e2 < 0.0) invalid("eps^2 negative");
    return branch_sign(b) * std::sqrt(e2);
  };
  e.bound_count = [](const Params& p) {
    CoshBarrierLevels lv;
    lv.init(p);
    int n = 0;
    while (true) {
      double gn = lv.g(n);
      if (gn >= 0.0 || gn * gn <= std::abs(lv.c) || lv.eps2(n) < 0.0) break;
      ++n;
    }
    return n;
  };
  e.wavefunction = [](const Params& p, int n, double eps) {
    CoshBarrierLevels lv;
    lv.init(p);
    double ep = 0.5 * (eps * eps - lv.k * lv.k - lv.S0 * lv.S0);
    double mu = std::sqrt(-2.0 * (ep + lv.k * lv.S0)) / lv.alpha;
    double nu = std::sqrt(-2.0 * (ep - lv.k * lv.S0)) / lv.alpha;
    // (1-y) side decays at x -> +inf where the threshold is (k+S0)^2.
    auto cand1 = tanh_jacobi_rule(lv.alpha, mu, nu, n);
    auto cand2 = tanh_jacobi_rule(lv.alpha, nu, mu, n);
    auto cfg = scalar_only(lv.k, Potential::tanh(lv.S0, lv.alpha));
    auto eff = potentials::reduce(cfg, potentials::SymmetryClass::ScalarOnly);
    Interval dom{-14.0 / lv.alpha, 14.0 / lv.alpha};
    double r1 = effective_residual(eff, cand1, eps, dom);
    double r2 = effective_residual(eff, cand2, eps, dom);
    return r1 <= r2 ? cand1 : cand2;
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::ScalarOnly);
  };
  e.eps_window = [](const Params& p, Branch b) {
    double k = p.at("k"), S0 = p.at("S0");
    double edge = std::min(std::abs(k + S0), std::abs(k - S0)) - 2e-3;
    return b == Branch::Positive ? std::pair{1e-3, edge} : std::pair{-edge, -1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double a = p.at("alpha");
    return Interval{-28.0 / a, 28.0 / a};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double a = p.at("alpha");
    return Interval{-16.0 / a, 16.0 / a};
  };
  return e;
}

// ---------------------------------------------------------------------------
// Exponentially decaying barrier: S = S0 e^{-alpha x} (Morse reduction).
// ---------------------------------------------------------------------------

struct ExpBarrierLevels {
  double k, S0, alpha, gamma, mu;
  void init(const Params& p) {
    k = p.at("k");
    S0 = p.at("S0");
    alpha = p.at("alpha");
    if (alpha <= 0.0) invalid("alpha must be positive");
    gamma = S0 * (2.0 * k - alpha) / (alpha * alpha);
    mu = std::abs(2.0 * S0 / alpha);
    if (mu == 0.0) invalid("S0 = 0 has no barrier");
  }
  double t(int n) const { return gamma / mu + n + 0.5; }
  double eps2(int n) const {
    return k * k - alpha * alpha * t(n) * t(n);
  }
  void check(int n) const {
    if (t(n) >= 0.0) invalid("no bound state at this index (gamma/mu + n + 1/2 >= 0)");
    if (eps2(n) < 0.0) invalid("eps^2 negative");
  }
};

Entry make_exp_barrier() {
  Entry e;
  e.id = "graphene_exp_barrier";
  e.title = "exponentially decaying magnetic barrier (Morse reduction)";
  e.cls = potentials::SymmetryClass::ScalarOnly;
  e.param_names = {"k", "S0", "alpha"};
  e.defaults = Params{{"k", 1.0}, {"S0", -1.0}, {"alpha", 0.25}};
  e.config = [](const Params& p) {
    return scalar_only(p.at("k"), Potential::exponential(p.at("S0"), p.at("alpha")));
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    ExpBarrierLevels lv;
    lv.init(p);
    lv.check(n);
    return branch_sign(b) * std::sqrt(lv.eps2(n));
  };
  e.bound_count = [](const Params& p) {
    ExpBarrierLevels lv;
    lv.init(p);
    int n = 0;
    while (lv.t(n) < 0.0 && lv.eps2(n) >= 0.0) ++n;
    return n;
  };
  e.wavefunction = [](const Params& p, int n, double) {
    ExpBarrierLevels lv;
    lv.init(p);
    double nu = -(2.0 * lv.gamma / lv.mu + 2.0 * n + 1.0);
    return morse_rule(lv.alpha, lv.mu, nu, n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::ScalarOnly);
  };
  e.eps_window = [](const Params& p, Branch b) {
    double k = std::abs(p.at("k"));
    return b == Branch::Positive ? std::pair{1e-3, k - 2e-3}
                                 : std::pair{-k + 2e-3, -1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double a = p.at("alpha");
    // left side confined by the e^{-2 alpha x} wall, right side by the free
    // threshold; long right tail for the shallow top level.
    return Interval{-4.0 / a, 60.0 / a};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double a = p.at("alpha");
    return Interval{-3.0 / a, 40.0 / a};
  };
  return e;
}

// ---------------------------------------------------------------------------
// Hulthen barrier: S = S0 / (e^{alpha x} - 1) on the half line.
// ---------------------------------------------------------------------------

struct HulthenLevels {
  double k, S0, alpha, nu, omega, gamma, q;
  void init_raw(double k_, double S0_, double alpha_) {
    k = k_;
    S0 = S0_;
    alpha = alpha_;
    if (alpha <= 0.0) invalid("alpha must be positive");
    nu = std::abs(2.0 * S0 / alpha - 1.0);
    omega = 0.5 * S0 * (S0 - alpha);
    gamma = 0.5 * S0 * (2.0 * k - alpha);
    q = 2.0 * (gamma - omega) / (alpha * alpha);
  }
  void init(const Params& p) { init_raw(p.at("k"), p.at("S0"), p.at("alpha")); }
  double base(int n) const { return n + 0.5 * (nu + 1.0); }
  double B(int n) const { return base(n) + q / base(n); }
  double eps2(int n) const {
    double b = B(n);
    return k * k - 0.25 * alpha * alpha * b * b;
  }
  void check(int n) const {
    if (B(n) >= 0.0) invalid("no bound state at this index (exponent not decaying)");
    if (eps2(n) < 0.0) invalid("eps^2 negative");
  }
  int count() const {
    int n = 0;
    while (B(n) < 0.0 && eps2(n) >= 0.0) ++n;
    return n;
  }
};

Entry make_hulthen_barrier() {
  Entry e;
  e.id = "graphene_hulthen_barrier";
  e.title = "Hulthen magnetic barrier on the half line";
  e.cls = potentials::SymmetryClass::ScalarOnly;
  e.param_names = {"k", "S0", "alpha"};
  e.defaults = Params{{"k", 1.0}, {"S0", -1.0}, {"alpha", 0.2}};
  e.config = [](const Params& p) {
    auto cfg = scalar_only(p.at("k"), Potential::hulthen(p.at("S0"), p.at("alpha")));
    cfg.x_domain = {0.0, 1e9};
    return cfg;
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    HulthenLevels lv;
    lv.init(p);
    lv.check(n);
    return branch_sign(b) * std::sqrt(lv.eps2(n));
  };
  e.bound_count = [](const Params& p) {
    HulthenLevels lv;
    lv.init(p);
    return lv.count();
  };
  e.wavefunction = [](const Params& p, int n, double) {
    HulthenLevels lv;
    lv.init(p);
    double mu_n = -lv.B(n) - 1.0;
    // (1-z) carries the x->inf decay (mu_n+1)/2; (1+z) the wall behavior.
    return shifted_exp_jacobi_rule(lv.alpha, 0.5 * (mu_n + 1.0),
                                   0.5 * (lv.nu + 1.0), n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::ScalarOnly);
  };
  e.eps_window = [](const Params& p, Branch b) {
    double k = std::abs(p.at("k"));
    return b == Branch::Positive ? std::pair{1e-3, k - 2e-3}
                                 : std::pair{-k + 2e-3, -1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double a = p.at("alpha");
    return Interval{1e-4 / a, 70.0 / a};
  };
  e.wf_domain = [](const Params& p, int n, double) {
    HulthenLevels lv;
    lv.init(p);
    double rate = 0.5 * lv.alpha * (-lv.B(n) - 1.0 + 1.0);  // alpha(mu_n+1)/2
    double hi = 6.0 / lv.alpha + 26.0 / rate;
    return Interval{0.01 / lv.alpha, hi};
  };
  return e;
}

// ---------------------------------------------------------------------------
// Constant field: S = gamma x (shifted oscillator ladder).
// ---------------------------------------------------------------------------

Entry make_constant_field() {
  Entry e;
  e.id = "graphene_constant_field";
  e.title = "uniform field, linear scalar coupling";
  e.note = "ladder eps_n^2 = 2 gamma (n+1) for the upper-branch tower; the "
           "alternative grouping 2 gamma + omega(2n+1) fails the oracle "
           "cross-check and is reported by validate";
  e.cls = potentials::SymmetryClass::ScalarOnly;
  e.param_names = {"k", "B0"};
  e.defaults = Params{{"k", 0.6}, {"B0", 1.0}};
  e.config = [](const Params& p) {
    return scalar_only(p.at("k"), Potential::linear(p.at("B0")));
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    double g = p.at("B0");
    if (g <= 0.0) invalid("field gamma must be positive for this branch");
    return branch_sign(b) * std::sqrt(2.0 * g * (n + 1.0));
  };
  e.bound_count = [](const Params&) { return -1; };
  e.wavefunction = [](const Params& p, int n, double) {
    double g = p.at("B0"), k = p.at("k");
    double x0 = k / g;
    auto val = [=](double x) {
      double u = x + x0;
      return hermite(n, std::sqrt(g) * u) * std::exp(-0.5 * g * u * u);
    };
    auto der = [=](double x) {
      double u = x + x0;
      double H = hermite(n, std::sqrt(g) * u);
      double Hm = n > 0 ? hermite(n - 1, std::sqrt(g) * u) : 0.0;
      return (2.0 * n * std::sqrt(g) * Hm - g * u * H) * std::exp(-0.5 * g * u * u);
    };
    return ComponentRule{val, der};
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::ScalarOnly);
  };
  e.eps_window = [](const Params& p, Branch b) {
    double g = p.at("B0");
    double hi = std::sqrt(2.0 * g * 12.0);
    return b == Branch::Positive ? std::pair{1e-3, hi} : std::pair{-hi, -1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double g = p.at("B0"), k = p.at("k");
    double x0 = k / g;
    double w = 12.0 / std::sqrt(g);
    return Interval{-x0 - w, -x0 + w};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double g = p.at("B0"), k = p.at("k");
    double x0 = k / g;
    double w = 10.0 / std::sqrt(g);
    return Interval{-x0 - w, -x0 + w};
  };
  return e;
}

// ---------------------------------------------------------------------------
// 1/x^2 field: S = gamma / x on the half line (Coulomb-type tail).
// ---------------------------------------------------------------------------

Entry make_inverse_square_field() {
  Entry e;
  e.id = "graphene_inverse_square_field";
  e.title = "inverse-square field, 1/x scalar coupling";
  e.note = "the n = 0 level is the zero mode (eps = 0); two-component "
           "assembly starts at n = 1";
  e.cls = potentials::SymmetryClass::ScalarOnly;
  e.param_names = {"k", "B0"};
  e.defaults = Params{{"k", -1.0}, {"B0", -1.6}};
  e.config = [](const Params& p) {
    double gamma = -p.at("B0");
    auto cfg = scalar_only(p.at("k"), Potential::inverse_power(gamma, 0.0));
    cfg.x_domain = {0.0, 1e9};
    return cfg;
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    double gamma = -p.at("B0"), k = p.at("k");
    if (gamma <= 0.5) invalid("gamma must exceed 1/2 for a regular envelope");
    if (k * gamma >= 0.0) invalid("k*gamma must be negative (attractive tail)");
    double e2 = k * k * (1.0 - gamma * gamma / ((n + gamma) * (n + gamma)));
    return branch_sign(b) * std::sqrt(e2);
  };
  e.bound_count = [](const Params&) { return -1; };
  e.wavefunction = [](const Params& p, int n, double) {
    double gamma = -p.at("B0"), k = p.at("k");
    double A = k * gamma;
    double nu = 2.0 * gamma - 1.0;
    double kap = -A / (n + gamma);
    return coulomb_rule(gamma, kap, nu, n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::ScalarOnly);
  };
  e.eps_window = [](const Params& p, Branch b) {
    double k = std::abs(p.at("k"));
    return b == Branch::Positive ? std::pair{1e-3, k - 5e-3}
                                 : std::pair{-k + 5e-3, -1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double gamma = -p.at("B0");
    double k = std::abs(p.at("k"));
    return Interval{1e-4, 90.0 * gamma / (k * k)};
  };
  e.wf_domain = [](const Params& p, int n, double) {
    double gamma = -p.at("B0");
    double k = std::abs(p.at("k"));
    double kap = std::abs(k) * gamma / (n + gamma);
    // The finite-difference stencil cannot follow the x^gamma cusp, so the
    // grid starts where the envelope carries real weight.
    return Interval{0.35 / kap, 40.0 / kap};
  };
  e.oracle_index = [](const Params&, int n) { return n - 1; };  // n = 0 zero mode
  return e;
}

// ---------------------------------------------------------------------------
// sec^2 field: S = S0 tan(lam x) on (-pi/2lam, pi/2lam).
// ---------------------------------------------------------------------------

struct Sec2Levels {
  double k, S0, lam, D, p;
  void init(const Params& par) {
    k = par.at("k");
    S0 = par.at("B0") / par.at("alpha");
    lam = par.at("alpha");
    double d2 = S0 * (S0 + lam) + 0.25 * lam * lam;
    if (d2 <= 0.0) invalid("S0(S0+lam) > -lam^2/4 violated");
    D = std::sqrt(d2);
    p = 0.5 + D / lam;
  }
  double s(int n) const { return p + n; }
  double tau(int n) const { return -k * S0 / (lam * lam * s(n)); }
  double eps2(int n) const {
    double sn = s(n);
    return k * k - S0 * S0 + lam * lam * sn * sn -
           (k * S0 / lam) * (k * S0 / lam) / (sn * sn);
  }
};

Entry make_sec2_field() {
  Entry e;
  e.id = "graphene_sec2_field";
  e.title = "trigonometric barrier, tan scalar coupling";
  e.note = "rising tower uses n+1/2+D/lam; the printed n+1/2-D/lam grouping "
           "fails the oracle cross-check and is reported by validate";
  e.cls = potentials::SymmetryClass::ScalarOnly;
  e.param_names = {"k", "B0", "alpha"};
  e.defaults = Params{{"k", 1.0}, {"B0", 1.0}, {"alpha", 1.0}};
  e.config = [](const Params& p) {
    double lam = p.at("alpha");
    auto cfg = scalar_only(p.at("k"), Potential::tan(p.at("B0") / lam, lam));
    double half = 0.5 * 3.14159265358979323846 / lam;
    cfg.x_domain = {-half, half};
    return cfg;
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    Sec2Levels lv;
    lv.init(p);
    double e2 = lv.eps2(n);
    if (e2 < 0.0) invalid("eps^2 negative");
    return branch_sign(b) * std::sqrt(e2);
  };
  e.bound_count = [](const Params&) { return -1; };  // confined: infinite tower
  e.wavefunction = [](const Params& p, int n, double) {
    Sec2Levels lv;
    lv.init(p);
    double btilde = lv.k * lv.S0 / (lv.lam * lv.lam);
    return trig_tower_rule(lv.lam, lv.p, btilde, n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::ScalarOnly);
  };
  e.eps_window = [](const Params& p, Branch b) {
    Sec2Levels lv;
    lv.init(p);
    double hi = std::sqrt(std::max(lv.eps2(8), 4.0)) + 0.5;
    return b == Branch::Positive ? std::pair{1e-3, hi} : std::pair{-hi, -1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double lam = p.at("alpha");
    double half = 0.5 * 3.14159265358979323846 / lam;
    return Interval{-half + 1e-5, half - 1e-5};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double lam = p.at("alpha");
    double half = 0.5 * 3.14159265358979323846 / lam;
    return Interval{-half + 1e-3, half - 1e-3};
  };
  return e;
}

// ---------------------------------------------------------------------------
// sinh^-2 field: S = S0 coth(lam x) = S0 + 2 S0 h(2 lam) on the half line;
// reuses the Hulthen machinery with the constant absorbed into the mass slot.
// ---------------------------------------------------------------------------

Entry make_sinh2_field() {
  Entry e;
  e.id = "graphene_sinh2_field";
  e.title = "sinh^-2 field, coth scalar coupling";
  e.note = "equivalent generalized Hulthen problem with k_eff = k + S0, "
           "S0_eff = 2 S0, rate 2 lam";
  e.cls = potentials::SymmetryClass::ScalarOnly;
  e.param_names = {"k", "B0", "alpha"};
  e.defaults = Params{{"k", 4.75}, {"B0", 0.09375}, {"alpha", 0.25}};
  auto eff_params = [](const Params& p) {
    double lam = p.at("alpha");
    double S0 = -p.at("B0") / lam;
    HulthenLevels lv;
    lv.init_raw(p.at("k") + S0, 2.0 * S0, 2.0 * lam);
    return lv;
  };
  e.config = [](const Params& p) {
    double lam = p.at("alpha");
    double S0 = -p.at("B0") / lam;
    auto cfg = scalar_only(p.at("k"),
                           Potential::hulthen_pair(2.0 * S0, 0.0, 2.0 * lam, S0));
    cfg.x_domain = {0.0, 1e9};
    return cfg;
  };
  e.residual_config = e.config;
  e.spectrum = [eff_params](const Params& p, int n, Branch b) {
    auto lv = eff_params(p);
    lv.check(n);
    return branch_sign(b) * std::sqrt(lv.eps2(n));
  };
  e.bound_count = [eff_params](const Params& p) { return eff_params(p).count(); };
  e.wavefunction = [eff_params](const Params& p, int n, double) {
    auto lv = eff_params(p);
    double mu_n = -lv.B(n) - 1.0;
    return shifted_exp_jacobi_rule(lv.alpha, 0.5 * (mu_n + 1.0),
                                   0.5 * (lv.nu + 1.0), n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::ScalarOnly);
  };
  e.eps_window = [eff_params](const Params& p, Branch b) {
    auto lv = eff_params(p);
    double edge = std::abs(lv.k) - 5e-3;
    return b == Branch::Positive ? std::pair{1e-3, edge} : std::pair{-edge, -1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double lam = p.at("alpha");
    return Interval{1e-4 / lam, 45.0 / lam};
  };
  e.wf_domain = [eff_params](const Params& p, int n, double) {
    auto lv = eff_params(p);
    double rate = 0.5 * lv.alpha * (-lv.B(n));  // alpha_eff (mu_n + 1)/2
    double hi = 6.0 / lv.alpha + 26.0 / rate;
    // Wall exponent (nu+1)/2 is mild here; inset until the stencil holds.
    double p_wall = 0.5 * (lv.nu + 1.0);
    double lo = (p_wall >= 4.5 ? 0.01 : 0.15) / lv.alpha;
    return Interval{lo, hi};
  };
  return e;
}

// ---------------------------------------------------------------------------
// Oscillator pairs: V = -S = V0 x^2 (pseudospin) and V = S = V0 x^2 (spin).
// ---------------------------------------------------------------------------

double oscillator_eps(double m, double V0, double nu, int n, Branch b,
                      bool pseudospin) {
  if (nu != 0.5 && nu != -0.5) invalid("nu must be +-1/2");
  double cnu = (nu > 0.0) ? 0.75 : 0.25;
  if (V0 == 0.0) return branch_sign(b) * m;
  if (b == Branch::Positive && V0 < 0.0)
    invalid("positive branch requires V0 > 0");
  if (b == Branch::Negative && V0 > 0.0)
    invalid("negative branch requires V0 < 0");
  // |eps|^2 - m^2 = 4 sqrt(2 (eps -+ m) V0) (n + cnu), solved on the branch.
  auto residual = [&](double eps) {
    double gap = pseudospin ? (eps - m) : (eps + m);
    return eps * eps - m * m - 4.0 * std::sqrt(2.0 * gap * V0) * (n + cnu);
  };
  if (b == Branch::Positive)
    return solver::implicit_solve(residual, m + 1e-12, std::abs(m) + 40.0 + 8.0 * n,
                                  1e-12);
  auto mirrored = [&](double eps) { return residual(-eps); };
  // For eps < 0, V0 < 0 the gap keeps the square root real.
  double r = solver::implicit_solve(mirrored, std::abs(m) + 1e-12,
                                    std::abs(m) + 40.0 + 8.0 * n, 1e-12);
  return -r;
}

Entry make_oscillator(bool pseudospin) {
  Entry e;
  e.id = pseudospin ? "pseudospin_oscillator" : "spin_oscillator";
  e.title = pseudospin ? "parabolic pseudospin-symmetric pair (V = -S = V0 x^2)"
                       : "parabolic spin-symmetric pair (V = S = V0 x^2)";
  e.cls = pseudospin ? potentials::SymmetryClass::PseudospinSymmetric
                     : potentials::SymmetryClass::SpinSymmetric;
  e.param_names = {"m", "V0", "nu"};
  e.defaults = Params{{"m", 1.0}, {"V0", 0.5}, {"nu", 0.5}};
  e.config = [pseudospin](const Params& p) {
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::quadratic(p.at("V0"));
    cfg.S = Potential::quadratic(pseudospin ? -p.at("V0") : p.at("V0"));
    return cfg;
  };
  e.residual_config = e.config;
  e.spectrum = [pseudospin](const Params& p, int n, Branch b) {
    return oscillator_eps(p.at("m"), p.at("V0"), p.get("nu", 0.5), n, b,
                          pseudospin);
  };
  e.bound_count = [](const Params&) { return -1; };
  e.wavefunction_is_lower = pseudospin;
  e.wavefunction = [pseudospin](const Params& p, int n, double eps) {
    double m = p.at("m"), V0 = p.at("V0"), nu = p.get("nu", 0.5);
    double gap = pseudospin ? (eps - m) : (eps + m);
    double omega = std::sqrt(2.0 * gap * V0);
    double lam = std::sqrt(omega);
    return oscillator_rule(lam, nu + 0.5, nu, n);
  };
  e.reduced = [cfg = e.config, pseudospin](const Params& p) {
    return potentials::reduce(cfg(p),
                              pseudospin
                                  ? potentials::SymmetryClass::PseudospinSymmetric
                                  : potentials::SymmetryClass::SpinSymmetric);
  };
  e.eps_window = [pseudospin](const Params& p, Branch b) {
    double m = p.at("m");
    double hi = std::abs(m) + 30.0;
    return b == Branch::Positive ? std::pair{m + 1e-3, hi}
                                 : std::pair{-hi, -std::abs(m) - 1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double V0 = std::abs(p.at("V0")) + 1e-6;
    double w = 14.0 / std::sqrt(std::sqrt(V0));
    return Interval{-w, w};
  };
  e.wf_domain = [pseudospin](const Params& p, int n, double eps) {
    double m = p.at("m"), V0 = p.at("V0");
    double gap = pseudospin ? (eps - m) : (eps + m);
    double omega = std::sqrt(std::max(2.0 * gap * V0, 1e-6));
    double w = (8.0 + 2.0 * std::sqrt(n + 1.0)) / std::sqrt(omega);
    return Interval{-w, w};
  };
  // One parity sector of the full even/odd tower seen by the oracle.
  e.oracle_index = [](const Params& p, int n) {
    return 2 * n + (p.get("nu", 0.5) > 0.0 ? 1 : 0);
  };
  return e;
}

// ---------------------------------------------------------------------------
// Spin-symmetric Rosen-Morse: V = S = V0 sech^2(alpha x), W = W0 tanh(alpha x).
// ---------------------------------------------------------------------------

struct RosenMorseLevels {
  double m, V0, W0, alpha;
  void init(const Params& p) {
    m = p.at("m");
    V0 = p.at("V0");
    W0 = p.at("W0");
    alpha = p.at("alpha");
  }
  double D2(double eps) const {
    return W0 * W0 + alpha * W0 - 2.0 * (eps + m) * V0 + 0.25 * alpha * alpha;
  }
  double g(double eps, int n) const {
    return n + 0.5 - std::sqrt(std::max(D2(eps), 0.0)) / alpha;
  }
  // eps^2 = m^2 + W0^2 - alpha^2 (n + 1/2 - |D/alpha|)^2, D eps-dependent.
  // The well is a symmetric sech^2 dip, so the only per-level requirements
  // are a real D, a negative g_n and an energy below the floor asymptote.
  double residual(double eps, int n) const {
    double gn = g(eps, n);
    return eps * eps - m * m - W0 * W0 + alpha * alpha * gn * gn;
  }
  std::string validity(double eps, int n) const {
    if (D2(eps) <= 0.0) return "D^2(eps) < 0 (coupling beyond the trusted window)";
    if (g(eps, n) >= 0.0) return "level index exceeds the well capacity";
    if (eps * eps >= m * m + W0 * W0) return "outside the bound window";
    return {};
  }
  double solve(int n, Branch b) const {
    double band = std::sqrt(m * m + W0 * W0);
    double lo = (b == Branch::Positive) ? -m + 1e-6 : -band + 1e-9;
    double hi = (b == Branch::Positive) ? band - 1e-9 : -m - 1e-6;
    if (V0 > 0.0) {
      double edge = (W0 * W0 + alpha * W0 + 0.25 * alpha * alpha) / (2.0 * V0) - m;
      hi = std::min(hi, edge - 1e-9);
    }
    if (lo >= hi) invalid("empty bracket for this branch");
    auto res = [&](double eps) { return residual(eps, n); };
    auto roots = all_roots(res, lo, hi);
    // Discard the degenerate eps -> -m root where the coupling dies.
    std::vector<double> good;
    for (double r : roots)
      if (std::abs(r + m) > 1e-5 && validity(r, n).empty()) good.push_back(r);
    if (good.empty()) invalid("no bound state at this index on this branch");
    return b == Branch::Positive ? good.back() : good.front();
  }
};

Entry make_spin_rosen_morse() {
  Entry e;
  e.id = "spin_rosen_morse";
  e.title = "spin-symmetric sech^2 well with tanh pseudoscalar";
  e.note = "level decay exponent |n+1/2-D/alpha| selected by residual over "
           "the sqrt(m^2-eps^2)/alpha grouping (validate reports both)";
  e.cls = potentials::SymmetryClass::SpinSymmetric;
  e.param_names = {"m", "V0", "W0", "alpha"};
  e.defaults = Params{{"m", 1.0}, {"V0", -0.6}, {"W0", 1.0}, {"alpha", 0.5}};
  e.config = [](const Params& p) {
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::sech_squared(p.at("V0"), p.at("alpha"));
    cfg.S = cfg.V;
    cfg.W = Potential::tanh(p.at("W0"), p.at("alpha"));
    return cfg;
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    RosenMorseLevels lv;
    lv.init(p);
    return lv.solve(n, b);
  };
  e.bound_count = [](const Params& p) {
    RosenMorseLevels lv;
    lv.init(p);
    int n = 0;
    while (true) {
      try {
        lv.solve(n, Branch::Positive);
      } catch (const Error&) {
        break;
      }
      ++n;
    }
    return n;
  };
  e.wavefunction = [](const Params& p, int n, double eps) {
    RosenMorseLevels lv;
    lv.init(p);
    double g_exp = std::abs(lv.g(eps, n));
    double alt = std::sqrt(std::max(lv.m * lv.m - eps * eps, 0.0)) / lv.alpha;
    auto cand1 = tanh_jacobi_rule(lv.alpha, g_exp, g_exp, n);
    auto cand2 = tanh_jacobi_rule(lv.alpha, alt, alt, n);
    PotentialConfig cfg;
    cfg.m = lv.m;
    cfg.V = Potential::sech_squared(lv.V0, lv.alpha);
    cfg.S = cfg.V;
    cfg.W = Potential::tanh(lv.W0, lv.alpha);
    auto eff = potentials::reduce(cfg, potentials::SymmetryClass::SpinSymmetric);
    Interval dom{-14.0 / lv.alpha, 14.0 / lv.alpha};
    double r1 = effective_residual(eff, cand1, eps, dom);
    double r2 = effective_residual(eff, cand2, eps, dom);
    return r1 <= r2 ? cand1 : cand2;
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::SpinSymmetric);
  };
  e.eps_window = [](const Params& p, Branch b) {
    RosenMorseLevels lv;
    lv.init(p);
    double hi = std::sqrt(lv.m * lv.m + lv.W0 * lv.W0) - 1e-3;
    return b == Branch::Positive ? std::pair{-lv.m + 1e-3, hi}
                                 : std::pair{-hi, -lv.m - 1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double a = p.at("alpha");
    return Interval{-30.0 / a, 30.0 / a};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double a = p.at("alpha");
    return Interval{-18.0 / a, 18.0 / a};
  };
  return e;
}

// ---------------------------------------------------------------------------
// Sinusoidal spin-symmetric well (numeric spectrum; series wavefunction).
// ---------------------------------------------------------------------------

jmatrix::TridiagonalBands sinusoidal_bands_impl(double m, double V0, double kappa,
                                                double mu, double nu) {
  PotentialConfig cfg;
  cfg.m = m;
  cfg.V = Potential::cosine(V0, kappa);
  cfg.S = cfg.V;
  auto spec = BasisSpec::jacobi(mu, nu, CoordinateMap::make(MapKind::Cosine, kappa));
  return jmatrix::bands(cfg, spec);
}

Entry make_spin_sinusoidal() {
  Entry e;
  e.id = "spin_sinusoidal";
  e.title = "sinusoidal spin-symmetric well (numeric three-term spectrum)";
  e.note = "expansion coefficients have no closed form; energies from the "
           "determinant scan";
  e.cls = potentials::SymmetryClass::SpinSymmetric;
  e.param_names = {"m", "V0", "kappa"};
  e.defaults = Params{{"m", 1.0}, {"V0", 0.5}, {"kappa", 1.5}};
  e.config = [](const Params& p) {
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::cosine(p.at("V0"), p.at("kappa"));
    cfg.S = cfg.V;
    double L = 3.14159265358979323846 / p.at("kappa");
    cfg.x_domain = {0.0, L};
    return cfg;
  };
  e.residual_config = e.config;
  e.spectrum = [](const Params& p, int n, Branch b) {
    double m = p.at("m"), V0 = p.at("V0"), kappa = p.at("kappa");
    auto bands = sinusoidal_bands_impl(m, V0, kappa, 0.5, 0.5);
    solver::ScanOptions opts;
    opts.max_roots = n + 1;
    double top = std::sqrt(m * m + kappa * kappa * (n + 3.0) * (n + 3.0)) +
                 2.0 * std::sqrt(std::abs(V0) * (std::abs(m) + 3.0)) + 1.0;
    solver::Spectrum sp;
    if (b == Branch::Positive)
      sp = solver::eigenvalue_scan(bands, 1e-4, top, b, opts);
    else
      sp = solver::eigenvalue_scan(bands, -top, -std::abs(m) - 1e-6, b, opts);
    if (n >= static_cast<int>(sp.entries.size()))
      invalid("level not found in the scan window");
    return sp.entries[n].eps;
  };
  e.bound_count = [](const Params&) { return -1; };  // confined well
  e.wavefunction = [](const Params& p, int n, double eps) {
    double m = p.at("m"), V0 = p.at("V0"), kappa = p.at("kappa");
    auto bands = sinusoidal_bands_impl(m, V0, kappa, 0.5, 0.5);
    auto spec = BasisSpec::jacobi(0.5, 0.5,
                                  CoordinateMap::make(MapKind::Cosine, kappa));
    auto f = series_coefficients(bands, eps, 200);
    (void)n;
    auto val = [=](double x) {
      double s = 0.0;
      for (std::size_t j = 0; j < f.size(); ++j)
        s += f[j] * basis::basis_upper(spec, static_cast<int>(j), x);
      return s;
    };
    auto der = [=](double x) {
      double s = 0.0;
      for (std::size_t j = 0; j < f.size(); ++j)
        s += f[j] * basis::basis_upper_deriv(spec, static_cast<int>(j), x);
      return s;
    };
    return ComponentRule{val, der};
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::SpinSymmetric);
  };
  e.eps_window = [](const Params& p, Branch b) {
    double m = p.at("m"), kappa = p.at("kappa");
    double hi = std::sqrt(m * m + kappa * kappa * 36.0) + 2.0;
    return b == Branch::Positive ? std::pair{1e-4, hi}
                                 : std::pair{-hi, -std::abs(m) - 1e-6};
  };
  e.oracle_domain = [](const Params& p) {
    double L = 3.14159265358979323846 / p.at("kappa");
    return Interval{0.0, L};
  };
  e.wf_domain = [](const Params& p, int, double) {
    // x^(3/2) wall behavior defeats the finite-difference stencil right at
    // the walls; the residual grid keeps a 2% inset.
    double L = 3.14159265358979323846 / p.at("kappa");
    return Interval{0.02 * L, 0.98 * L};
  };
  return e;
}

// ---------------------------------------------------------------------------
// General-case oscillator: S = W = 0, V = V0 x^2 (Meixner-Pollaczek ladder).
// ---------------------------------------------------------------------------

struct GeneralOscillator {
  double m, V0, eta, kappa;
  void init(const Params& p) {
    m = p.at("m");
    V0 = p.at("V0");
    eta = p.get("eta", 1.0);
    kappa = p.get("kappa", 1.0);
  }
  double rho(double eps) const {
    return 4.0 * (eps + m) * V0 / (eta * std::pow(kappa, 4)) - 0.25;
  }
  // |m^2 - eps^2| = 4 sqrt((eps + m) eta V0) (n + 3/4) on the chosen branch.
  double solve(int n, Branch b) const {
    if (b == Branch::Positive) {
      if (V0 <= 0.0) invalid("positive branch requires V0 > 0");
      auto res = [&](double eps) {
        return eps * eps - m * m -
               4.0 * std::sqrt((eps + m) * eta * V0) * (n + 0.75);
      };
      double r = solver::implicit_solve(res, std::abs(m) + 1e-12,
                                        std::abs(m) + 50.0 + 10.0 * n, 1e-12);
      if (rho(r) <= 0.0)
        invalid("rho(eps_n) <= 0: outside the tridiagonal trust region");
      return r;
    }
    if (V0 >= 0.0) invalid("negative branch requires V0 < 0");
    auto res = [&](double eps) {
      return eps * eps - m * m -
             4.0 * std::sqrt((eps + m) * eta * V0) * (n + 0.75);
    };
    double r = solver::implicit_solve([&](double t) { return res(-t); },
                                      std::abs(m) + 1e-12,
                                      std::abs(m) + 50.0 + 10.0 * n, 1e-12);
    return -r;
  }
};

Entry make_general_oscillator() {
  Entry e;
  e.id = "general_oscillator";
  e.title = "parabolic electrostatic barrier, no symmetry (kinetic-balance route)";
  e.note = "closed solution solves the equivalent spin-symmetric split "
           "V = S = V0 x^2/2 exactly; the residual gate runs against that "
           "configuration";
  e.cls = potentials::SymmetryClass::General;
  e.param_names = {"m", "V0", "eta", "kappa"};
  e.defaults = Params{{"m", 1.0}, {"V0", 0.5}, {"eta", 1.0}, {"kappa", 1.0}};
  e.config = [](const Params& p) {
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::quadratic(p.at("V0"));
    return cfg;
  };
  e.residual_config = [](const Params& p) {
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::quadratic(0.5 * p.at("V0"));
    cfg.S = cfg.V;
    return cfg;
  };
  e.spectrum = [](const Params& p, int n, Branch b) {
    GeneralOscillator go;
    go.init(p);
    return go.solve(n, b);
  };
  e.bound_count = [](const Params&) { return -1; };
  e.wavefunction = [](const Params& p, int n, double eps) {
    GeneralOscillator go;
    go.init(p);
    auto spec = BasisSpec::laguerre(
        0.5, CoordinateMap::make(MapKind::Quadratic, go.kappa / 2.0), go.eta);
    PotentialConfig cfg;
    cfg.m = go.m;
    cfg.V = Potential::quadratic(go.V0);
    auto bands = jmatrix::bands(cfg, spec);
    auto f = series_coefficients(bands, eps, 220);
    (void)n;
    auto val = [=](double x) {
      double s = 0.0;
      for (std::size_t j = 0; j < f.size(); ++j)
        s += f[j] * basis::basis_upper(spec, static_cast<int>(j), x);
      return s;
    };
    auto der = [=](double x) {
      double s = 0.0;
      for (std::size_t j = 0; j < f.size(); ++j)
        s += f[j] * basis::basis_upper_deriv(spec, static_cast<int>(j), x);
      return s;
    };
    return ComponentRule{val, der};
  };
  e.reduced = [](const Params& p) {
    // Effective one-component problem of the kinetic-balance route.
    double m = p.at("m"), V0 = p.at("V0"), eta = p.get("eta", 1.0);
    potentials::EffectiveSchrodinger eff;
    eff.u = [m, V0, eta](double x, double eps) {
      return 0.5 * (eps + m) * V0 * x * x / eta;
    };
    eff.e_of_eps = [m, eta](double eps) {
      return 0.5 * (eps * eps - m * m) / eta;
    };
    eff.eps_dependent = true;
    eff.x_domain = {-30.0, 30.0};
    return eff;
  };
  e.eps_window = [](const Params& p, Branch b) {
    double m = p.at("m");
    double hi = std::abs(m) + 40.0;
    return b == Branch::Positive ? std::pair{m + 1e-4, hi}
                                 : std::pair{-hi, -std::abs(m) - 1e-4};
  };
  e.oracle_domain = [](const Params& p) {
    double V0 = std::abs(p.at("V0")) + 1e-6;
    double w = 15.0 / std::sqrt(std::sqrt(V0));
    return Interval{-w, w};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double kappa = p.get("kappa", 1.0);
    return Interval{-13.6 / kappa, 13.6 / kappa};
  };
  e.oracle_index = [](const Params&, int n) { return 2 * n + 1; };  // odd sector
  return e;
}

// ---------------------------------------------------------------------------
// Exponential spin-symmetric pairs and the tanh pair.
// ---------------------------------------------------------------------------

Entry make_exp_pair_scalar() {
  Entry e;
  e.id = "spin_exp_pair_scalar";
  e.title = "spin-symmetric two-term exponential well";
  e.note = "spectrum bracket uses (A/2B) sqrt(eps+m); the printed (A/B) "
           "grouping fails the oracle cross-check and is reported by validate";
  e.cls = potentials::SymmetryClass::SpinSymmetric;
  e.param_names = {"m", "A", "B", "lambda"};
  e.defaults = Params{{"m", 1.0}, {"A", -4.0}, {"B", 1.0}, {"lambda", 0.7}};
  e.config = [](const Params& p) {
    double lam = p.at("lambda");
    double c = 0.5 * lam * lam;
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::exp_pair(c * p.at("A"), c * p.at("B") * p.at("B"), lam);
    cfg.S = cfg.V;
    return cfg;
  };
  e.residual_config = e.config;
  auto bracket = [](const Params& p, double eps, int n) {
    return 0.5 * p.at("A") / p.at("B") * std::sqrt(eps + p.at("m")) + n + 0.5;
  };
  e.spectrum = [bracket](const Params& p, int n, Branch b) {
    double m = p.at("m"), lam = p.at("lambda");
    if (b == Branch::Negative)
      invalid("the level condition binds only inside (-m, m); no negative tower");
    auto res = [&](double eps) {
      double t = bracket(p, eps, n);
      return eps * eps - m * m + lam * lam * t * t;
    };
    auto roots = all_roots(res, -m + 1e-9, m - 1e-9);
    std::vector<double> good;
    for (double r : roots)
      if (bracket(p, r, n) < 0.0) good.push_back(r);
    if (good.empty()) invalid("no bound state at this index");
    return good.back();  // upper-sector root
  };
  e.bound_count = [](const Params& p) {
    const Entry& self = find("spin_exp_pair_scalar");
    int n = 0;
    while (true) {
      try {
        self.spectrum(p, n, Branch::Positive);
      } catch (const Error&) {
        break;
      }
      ++n;
    }
    return n;
  };
  e.wavefunction = [bracket](const Params& p, int n, double eps) {
    double lam = p.at("lambda"), B = p.at("B"), m = p.at("m");
    double mu_r = 2.0 * B * std::sqrt(eps + m);
    double nu = -2.0 * bracket(p, eps, n);  // Morse decay exponent
    return morse_rule(lam, mu_r, nu, n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::SpinSymmetric);
  };
  e.eps_window = [](const Params& p, Branch) {
    double m = p.at("m");
    return std::pair{-m + 1e-3, m - 1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double lam = p.at("lambda");
    return Interval{-6.0 / lam, 60.0 / lam};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double lam = p.at("lambda");
    return Interval{-4.0 / lam, 45.0 / lam};
  };
  return e;
}

Entry make_exp_pair_pseudoscalar() {
  Entry e;
  e.id = "spin_exp_pair_pseudoscalar";
  e.title = "spin-symmetric exponential well with exponential pseudoscalar";
  e.note = "bracket (eps+m)V0/(lam W0) + n + 1; the printed 2V0(eps+m)/(W0 "
           "lam) + n + 3/2 grouping fails the oracle cross-check and is "
           "reported by validate";
  e.cls = potentials::SymmetryClass::SpinSymmetric;
  e.param_names = {"m", "V0", "W0", "lambda"};
  e.defaults = Params{{"m", 1.0}, {"V0", -2.0}, {"W0", 0.8}, {"lambda", 1.0}};
  e.config = [](const Params& p) {
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::exponential(p.at("V0"), p.at("lambda"));
    cfg.S = cfg.V;
    cfg.W = Potential::exponential(p.at("W0"), p.at("lambda"));
    return cfg;
  };
  e.residual_config = e.config;
  auto bracket = [](const Params& p, double eps, int n) {
    return (eps + p.at("m")) * p.at("V0") / (p.at("lambda") * p.at("W0")) + n + 1.0;
  };
  e.spectrum = [bracket](const Params& p, int n, Branch b) {
    double m = p.at("m"), lam = p.at("lambda");
    if (b == Branch::Negative)
      invalid("the level condition binds only inside (-m, m); no negative tower");
    auto res = [&](double eps) {
      double t = bracket(p, eps, n);
      return eps * eps - m * m + lam * lam * t * t;
    };
    auto roots = all_roots(res, -m + 1e-9, m - 1e-9);
    std::vector<double> good;
    for (double r : roots)
      if (bracket(p, r, n) < 0.0) good.push_back(r);
    if (good.empty()) invalid("no bound state at this index");
    return good.back();
  };
  e.bound_count = [](const Params& p) {
    const Entry& self = find("spin_exp_pair_pseudoscalar");
    int n = 0;
    while (true) {
      try {
        self.spectrum(p, n, Branch::Positive);
      } catch (const Error&) {
        break;
      }
      ++n;
    }
    return n;
  };
  e.wavefunction = [bracket](const Params& p, int n, double eps) {
    double lam = p.at("lambda"), W0 = p.at("W0");
    double mu_r = 2.0 * W0 / lam;
    double nu = -2.0 * bracket(p, eps, n);
    return morse_rule(lam, mu_r, nu, n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::SpinSymmetric);
  };
  e.eps_window = [](const Params& p, Branch) {
    double m = p.at("m");
    return std::pair{-m + 1e-3, m - 1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double lam = p.at("lambda");
    return Interval{-6.0 / lam, 60.0 / lam};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double lam = p.at("lambda");
    return Interval{-4.0 / lam, 45.0 / lam};
  };
  return e;
}

Entry make_tanh_pair() {
  Entry e;
  e.id = "spin_tanh_pair";
  e.title = "spin-symmetric tanh pair (Rosen-Morse with sloped floor)";
  e.note = "per-degree upper-sector roots; the nonlinear level conditions "
           "admit further states the closed enumeration does not cover";
  e.count_exhaustive = false;
  e.cls = potentials::SymmetryClass::SpinSymmetric;
  e.param_names = {"m", "V0", "W0", "lambda"};
  e.defaults = Params{{"m", 1.0}, {"V0", 0.15}, {"W0", 1.2}, {"lambda", 0.4}};
  e.config = [](const Params& p) {
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::tanh(p.at("V0"), p.at("lambda"));
    cfg.S = cfg.V;
    cfg.W = Potential::tanh(p.at("W0"), p.at("lambda"));
    return cfg;
  };
  e.residual_config = e.config;
  // D^2 = W0^2 + lam W0 + lam^2/4 = (W0 + lam/2)^2, so g_n = n - W0/lam.
  auto level = [](const Params& p, double eps, int n) {
    double lam = p.at("lambda"), W0 = p.at("W0"), V0 = p.at("V0");
    double m = p.at("m");
    double g = n - W0 / lam;
    double c = (eps + m) * V0 / (lam * lam);
    return eps * eps - m * m - W0 * W0 + lam * lam * (g * g + c * c / (g * g));
  };
  e.spectrum = [level](const Params& p, int n, Branch b) {
    double m = p.at("m"), lam = p.at("lambda"), W0 = p.at("W0");
    double g = n - W0 / lam;
    if (g >= 0.0) invalid("level index exceeds the well capacity (n >= W0/lambda)");
    double hi = std::sqrt(m * m + W0 * W0) - 1e-9;
    auto res = [&](double eps) { return level(p, eps, n); };
    auto check = [&](double eps) -> std::string {
      double c = (eps + m) * p.at("V0") / (lam * lam);
      if (g * g <= std::abs(c)) return "level beyond the last bound state";
      return {};
    };
    if (b == Branch::Positive)
      return solver::implicit_solve(res, -m + 1e-6, hi, 1e-12, check);
    return solver::implicit_solve(res, -hi, -m - 1e-6, 1e-12, check);
  };
  e.bound_count = [level](const Params& p) {
    const Entry& self = find("spin_tanh_pair");
    int n = 0;
    while (true) {
      try {
        self.spectrum(p, n, Branch::Positive);
      } catch (const Error&) {
        break;
      }
      ++n;
    }
    return n;
  };
  e.wavefunction = [](const Params& p, int n, double eps) {
    double lam = p.at("lambda"), W0 = p.at("W0"), V0 = p.at("V0"), m = p.at("m");
    double E = 0.5 * (eps * eps - m * m) - 0.5 * W0 * W0;  // depth below the floor
    double C = (eps + m) * V0;
    // (1-y) pairs with the x -> +inf threshold, where the floor is raised by
    // +C, so that side carries sqrt(-2(E - C)).
    double a_exp = std::sqrt(std::max(-2.0 * (E - C), 0.0)) / lam;
    double b_exp = std::sqrt(std::max(-2.0 * (E + C), 0.0)) / lam;
    return tanh_jacobi_rule(lam, a_exp, b_exp, n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::SpinSymmetric);
  };
  e.eps_window = [](const Params& p, Branch b) {
    double m = p.at("m"), W0 = p.at("W0");
    double hi = std::sqrt(m * m + W0 * W0) - 1e-3;
    return b == Branch::Positive ? std::pair{-m + 1e-3, hi}
                                 : std::pair{-hi, -m - 1e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double lam = p.at("lambda");
    return Interval{-28.0 / lam, 28.0 / lam};
  };
  e.wf_domain = [](const Params& p, int, double) {
    double lam = p.at("lambda");
    return Interval{-18.0 / lam, 18.0 / lam};
  };
  return e;
}

Entry make_hulthen_pair() {
  Entry e;
  e.id = "spin_hulthen_pair";
  e.title = "spin-symmetric generalized Hulthen pair on the half line";
  e.note = "per-degree upper-sector roots; the nonlinear level conditions "
           "admit further states the closed enumeration does not cover";
  e.count_exhaustive = false;
  e.cls = potentials::SymmetryClass::SpinSymmetric;
  e.param_names = {"m", "A", "C", "lambda"};
  e.defaults = Params{{"m", 1.0}, {"A", 0.5}, {"C", 0.05}, {"lambda", 0.25}};
  // V(x) = C h_-^2 + A h_- with h_- = 1/(e^{-lam x}-1) rewritten in
  // h = 1/(e^{lam x}-1): V = (C - A) + (2C - A) h + C h^2.
  e.config = [](const Params& p) {
    double A = p.at("A"), C = p.at("C"), lam = p.at("lambda");
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::hulthen_pair(2.0 * C - A, C, lam, C - A);
    cfg.S = cfg.V;
    cfg.x_domain = {0.0, 1e9};
    return cfg;
  };
  e.residual_config = e.config;
  auto pieces = [](const Params& p, double eps) {
    double A = p.at("A"), C = p.at("C"), lam = p.at("lambda"), m = p.at("m");
    double Ct = (eps + m) * C;
    double nu = std::sqrt(1.0 + 8.0 * Ct / (lam * lam));
    double q = 2.0 * (eps + m) * (C - A) / (lam * lam);
    return std::pair{nu, q};
  };
  e.spectrum = [pieces](const Params& p, int n, Branch b) {
    double m = p.at("m"), lam = p.at("lambda"), A = p.at("A"), C = p.at("C");
    if (b == Branch::Negative)
      invalid("the level condition binds only inside (-m, m); no negative tower");
    auto res = [&](double eps) {
      auto [nu, q] = pieces(p, eps);
      double base = n + 0.5 * (nu + 1.0);
      double B = base + q / base;
      // E - (eps+m)(C-A) = -(lam^2/8) B^2
      return eps * eps - m * m - 2.0 * (eps + m) * (C - A) +
             0.25 * lam * lam * B * B;
    };
    auto roots = all_roots(res, -m + 1e-9, m - 1e-9);
    std::vector<double> good;
    for (double r : roots) {
      auto [nu, q] = pieces(p, r);
      double base = n + 0.5 * (nu + 1.0);
      if (base + q / base < 0.0) good.push_back(r);
    }
    if (good.empty()) invalid("no bound state at this index");
    return good.back();
  };
  e.bound_count = [](const Params& p) {
    const Entry& self = find("spin_hulthen_pair");
    int n = 0;
    while (true) {
      try {
        self.spectrum(p, n, Branch::Positive);
      } catch (const Error&) {
        break;
      }
      ++n;
    }
    return n;
  };
  e.wavefunction = [pieces](const Params& p, int n, double eps) {
    auto [nu, q] = pieces(p, eps);
    double base = n + 0.5 * (nu + 1.0);
    double B = base + q / base;
    double mu_n = -B - 1.0;
    return shifted_exp_jacobi_rule(p.at("lambda"), 0.5 * (mu_n + 1.0),
                                   0.5 * (nu + 1.0), n);
  };
  e.reduced = [cfg = e.config](const Params& p) {
    return potentials::reduce(cfg(p), potentials::SymmetryClass::SpinSymmetric);
  };
  e.eps_window = [](const Params& p, Branch) {
    double m = p.at("m");
    return std::pair{-m + 1e-3, m - 2e-3};
  };
  e.oracle_domain = [](const Params& p) {
    double lam = p.at("lambda");
    return Interval{1e-4 / lam, 70.0 / lam};
  };
  e.wf_domain = [pieces](const Params& p, int n, double eps) {
    auto [nu, q] = pieces(p, eps);
    double base = n + 0.5 * (nu + 1.0);
    double lam = p.at("lambda");
    double rate = 0.5 * lam * (-(base + q / base));
    double hi = 6.0 / lam + 26.0 / std::max(rate, 0.05);
    double p_wall = 0.5 * (nu + 1.0);
    double lo = (p_wall >= 4.5 ? 0.01 : 0.15) / lam;
    return Interval{lo, hi};
  };
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<double> series_coefficients(const jmatrix::TridiagonalBands& bands,
                                        double eps, int N) {
  // The forward pass only locates the turnaround index: at a bound state the
  // wanted solution is the minimal one, so forward recursion is contaminated
  // by the dominant solution once the coefficients get small.
  auto fwd = solver::recursion_run(bands, eps, N);
  double peak = 0.0;
  int turn = N;
  double best = std::numeric_limits<double>::max();
  for (int j = 0; j <= N; ++j) {
    double a = std::abs(fwd.value(j));
    peak = std::max(peak, a);
    if (a < best) {
      best = a;
      turn = j;
    }
  }
  if (peak == 0.0) throw Error(ErrorKind::SeriesDivergence, "all coefficients zero");
  if (best > 1e-10 * peak || turn + 40 > 512)
    throw Error(ErrorKind::SeriesDivergence,
                "coefficient tail not settled by j = " + std::to_string(N));

  // Backward (minimal-solution) recursion from beyond the turnaround,
  // normalized to f_0 = 1.
  int top = turn + 40;
  std::vector<double> f(top + 2, 0.0);
  f[top + 1] = 0.0;
  f[top] = 1.0;
  for (int n = top; n >= 1; --n) {
    double cm = bands.c(n - 1, eps);
    if (cm == 0.0) throw Error(ErrorKind::RecursionBreakdown, "c vanished");
    f[n - 1] = -(bands.d(n, eps) * f[n] + bands.c(n, eps) * f[n + 1]) / cm;
    double mag = std::abs(f[n - 1]);
    if (mag > 1e100)
      for (int j = n - 1; j <= top + 1; ++j) f[j] /= mag;
  }
  if (f[0] == 0.0) throw Error(ErrorKind::SeriesDivergence, "f_0 vanished");
  double scale = 1.0 / f[0];
  double fpeak = 0.0;
  for (auto& v : f) {
    v *= scale;
    fpeak = std::max(fpeak, std::abs(v));
  }
  // Drop the negligible tail.
  int last = top;
  while (last > 2 && std::abs(f[last]) < 1e-13 * fpeak &&
         std::abs(f[last - 1]) < 1e-13 * fpeak)
    --last;
  f.resize(last + 1);
  return f;
}

jmatrix::TridiagonalBands table2_bands(double m, double V0, double kappa) {
  jmatrix::TridiagonalBands b;
  b.m = m;
  b.eta = 1.0;
  b.d = [m, kappa](int n, double eps) {
    return eps * (eps + m) - m * m - kappa * kappa * (n + 1.0) * (n + 1.0);
  };
  b.c = [m, V0](int, double) { return m * V0; };
  b.has_prefactor_pole = false;
  b.spec = BasisSpec::jacobi(0.5, 0.5, CoordinateMap::make(MapKind::Cosine, kappa));
  return b;
}

jmatrix::TridiagonalBands sinusoidal_bands(double m, double V0, double kappa,
                                           double mu, double nu) {
  return sinusoidal_bands_impl(m, V0, kappa, mu, nu);
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> reg = [] {
    std::vector<Entry> v;
    v.push_back(make_cosh_barrier());
    v.push_back(make_exp_barrier());
    v.push_back(make_hulthen_barrier());
    v.push_back(make_constant_field());
    v.push_back(make_inverse_square_field());
    v.push_back(make_sec2_field());
    v.push_back(make_sinh2_field());
    v.push_back(make_oscillator(true));
    v.push_back(make_oscillator(false));
    v.push_back(make_spin_rosen_morse());
    v.push_back(make_spin_sinusoidal());
    v.push_back(make_general_oscillator());
    v.push_back(make_exp_pair_scalar());
    v.push_back(make_exp_pair_pseudoscalar());
    v.push_back(make_tanh_pair());
    v.push_back(make_hulthen_pair());
    for (auto& e : v) {
      if (!e.oracle_index) e.oracle_index = [](const Params&, int n) { return n; };
      if (!e.residual_config) e.residual_config = e.config;
    }
    return v;
  }();
  return reg;
}

const Entry& find(const std::string& id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  std::string known;
  for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.id;
  throw Error(ErrorKind::UnknownEntry, "no catalog entry '" + id + "' (known: " + known + ")");
}

double spectrum(const Entry& entry, const Params& params, int n, Branch branch) {
  return entry.spectrum(params, n, branch);
}

ResolvedState resolve_state(const Entry& entry, const Params& params, int n,
                            Branch branch) {
  if (!entry.has_wavefunction)
    throw Error(ErrorKind::MissingSpectrum,
                "entry '" + entry.id + "' has no wavefunction constructor");
  ResolvedState st;
  st.eps = entry.spectrum(params, n, branch);
  st.rule = entry.wavefunction(params, n, st.eps);
  st.domain = entry.wf_domain(params, n, st.eps);
  st.is_lower = entry.wavefunction_is_lower;
  return st;
}

double wavefunction_upper(const Entry& entry, const Params& params, int n,
                          double x, Branch branch) {
  auto st = resolve_state(entry, params, n, branch);
  return st.rule.value(x);
}

// ---------------------------------------------------------------------------
// One-component solvable rows.
// ---------------------------------------------------------------------------

namespace {

SchrodingerRow make_row_coulomb() {
  SchrodingerRow r;
  r.id = "sch_coulomb_inverse_square";
  r.title = "A/x + c2/x^2 on the half line";
  r.param_names = {"A", "B", "l"};
  r.defaults = Params{{"A", -1.0}, {"B", 0.25}, {"l", 0.0}};
  auto nu_of = [](const Params& p) {
    double l = p.get("l", 0.0);
    return -1.0 + 2.0 * std::sqrt((l + 0.5) * (l + 0.5) + 2.0 * p.at("B"));
  };
  r.energy = [nu_of](const Params& p, int n) {
    double A = p.at("A");
    if (A >= 0.0) invalid("bound states need A < 0");
    double nu = nu_of(p);
    double d = n + 0.5 * nu + 1.0;
    return -0.5 * (A / d) * (A / d);
  };
  r.bound_count = [](const Params&) { return -1; };
  r.wavefunction = [nu_of](const Params& p, int n, double x) {
    double nu = nu_of(p);
    double s = 0.5 * (nu + 2.0);
    double kap = -p.at("A") / (n + s);
    return coulomb_rule(s, kap, nu, n).value(x);
  };
  r.potential = [](const Params& p, double x) {
    double l = p.get("l", 0.0);
    return p.at("A") / x + (p.at("B") + 0.5 * l * (l + 1.0)) / (x * x);
  };
  r.domain = [](const Params&) { return Interval{1e-4, 200.0}; };
  return r;
}

SchrodingerRow make_row_oscillator() {
  SchrodingerRow r;
  r.id = "sch_oscillator_inverse_square";
  r.title = "lam^4 x^2/2 + c2/x^2 on the half line";
  r.note = "E_n = lam^2(2n + (nu+3)/2); the printed lam^2(2n+nu+2) grouping "
           "fails the oracle cross-check and is reported by validate";
  r.param_names = {"lambda", "B", "l"};
  r.defaults = Params{{"lambda", 1.0}, {"B", 0.25}, {"l", 0.0}};
  auto nu_of = [](const Params& p) {
    double l = p.get("l", 0.0);
    return -1.0 + 2.0 * std::sqrt((l + 0.5) * (l + 0.5) + 2.0 * p.at("B"));
  };
  r.energy = [nu_of](const Params& p, int n) {
    double lam = p.at("lambda");
    return lam * lam * (2.0 * n + 0.5 * (nu_of(p) + 3.0));
  };
  r.bound_count = [](const Params&) { return -1; };
  r.wavefunction = [nu_of](const Params& p, int n, double x) {
    double nu = nu_of(p);
    double lam = p.at("lambda");
    return pow_safe(lam * x, 0.5 * (nu + 1.0)) *
           std::exp(-0.5 * lam * lam * x * x) *
           laguerre_eval(n, nu, lam * lam * x * x);
  };
  r.potential = [](const Params& p, double x) {
    double l = p.get("l", 0.0), lam = p.at("lambda");
    return 0.5 * std::pow(lam, 4) * x * x +
           (p.at("B") + 0.5 * l * (l + 1.0)) / (x * x);
  };
  r.domain = [](const Params& p) {
    return Interval{1e-4, 14.0 / p.at("lambda")};
  };
  return r;
}

SchrodingerRow make_row_morse() {
  SchrodingerRow r;
  r.id = "sch_morse";
  r.title = "two-term exponential well on the line";
  r.param_names = {"A", "mu", "lambda"};
  r.defaults = Params{{"A", -3.5}, {"mu", 2.0}, {"lambda", 1.0}};
  r.energy = [](const Params& p, int n) {
    double t = p.at("A") / p.at("mu") + n + 0.5;
    if (t >= 0.0) invalid("no bound state at this index");
    double lam = p.at("lambda");
    return -0.5 * lam * lam * t * t;
  };
  r.bound_count = [](const Params& p) {
    int n = 0;
    while (p.at("A") / p.at("mu") + n + 0.5 < 0.0) ++n;
    return n;
  };
  r.wavefunction = [](const Params& p, int n, double x) {
    double nu = -(2.0 * p.at("A") / p.at("mu") + 2.0 * n + 1.0);
    return morse_rule(p.at("lambda"), p.at("mu"), nu, n).value(x);
  };
  r.potential = [](const Params& p, double x) {
    double lam = p.at("lambda"), mu = p.at("mu");
    double e = std::exp(-lam * x);
    return 0.5 * lam * lam * (p.at("A") * e + 0.25 * mu * mu * e * e);
  };
  r.domain = [](const Params& p) {
    double lam = p.at("lambda");
    return Interval{-6.0 / lam, 50.0 / lam};
  };
  return r;
}

SchrodingerRow make_row_hulthen() {
  SchrodingerRow r;
  r.id = "sch_hulthen";
  r.title = "generalized Hulthen well on the half line";
  r.param_names = {"A", "C", "lambda"};
  r.defaults = Params{{"A", -3.0}, {"C", 0.3}, {"lambda", 1.0}};
  auto pieces = [](const Params& p) {
    double lam = p.at("lambda");
    double nu = std::sqrt(1.0 + 8.0 * p.at("C") / (lam * lam));
    double q = 2.0 * (p.at("A") - p.at("C")) / (lam * lam);
    return std::pair{nu, q};
  };
  r.energy = [pieces](const Params& p, int n) {
    auto [nu, q] = pieces(p);
    double base = n + 0.5 * (nu + 1.0);
    double B = base + q / base;
    if (B >= 0.0) invalid("no bound state at this index");
    double lam = p.at("lambda");
    return -0.125 * lam * lam * B * B;
  };
  r.bound_count = [pieces](const Params& p) {
    auto [nu, q] = pieces(p);
    int n = 0;
    while (true) {
      double base = n + 0.5 * (nu + 1.0);
      if (base + q / base >= 0.0) break;
      ++n;
    }
    return n;
  };
  r.wavefunction = [pieces](const Params& p, int n, double x) {
    auto [nu, q] = pieces(p);
    double base = n + 0.5 * (nu + 1.0);
    double mu_n = -(base + q / base) - 1.0;
    return shifted_exp_jacobi_rule(p.at("lambda"), 0.5 * (mu_n + 1.0),
                                   0.5 * (nu + 1.0), n)
        .value(x);
  };
  r.potential = [](const Params& p, double x) {
    double h = 1.0 / std::expm1(p.at("lambda") * x);
    return p.at("C") * h * h + p.at("A") * h;
  };
  r.domain = [](const Params& p) {
    double lam = p.at("lambda");
    return Interval{1e-4 / lam, 60.0 / lam};
  };
  return r;
}

SchrodingerRow make_row_rosen_morse() {
  SchrodingerRow r;
  r.id = "sch_rosen_morse";
  r.title = "tanh slope over a sech^2 well";
  r.param_names = {"A", "C", "lambda"};
  r.defaults = Params{{"A", -4.0}, {"C", 1.0}, {"lambda", 1.0}};
  auto g_of = [](const Params& p, int n) {
    double lam = p.at("lambda");
    double D = std::sqrt(0.25 * lam * lam - 2.0 * p.at("A"));
    return n + 0.5 - D / lam;
  };
  r.energy = [g_of](const Params& p, int n) {
    double lam = p.at("lambda"), C = p.at("C");
    double g = g_of(p, n);
    if (g >= 0.0) invalid("no bound state at this index");
    double c = C / (lam * lam);
    if (g * g <= std::abs(c)) invalid("level beyond the last bound state");
    return -0.5 * lam * lam * (g * g + c * c / (g * g));
  };
  r.bound_count = [g_of](const Params& p) {
    double lam = p.at("lambda");
    double c = p.at("C") / (lam * lam);
    int n = 0;
    while (true) {
      double g = g_of(p, n);
      if (g >= 0.0 || g * g <= std::abs(c)) break;
      ++n;
    }
    return n;
  };
  r.wavefunction = [g_of](const Params& p, int n, double x) {
    double lam = p.at("lambda"), C = p.at("C");
    double g = g_of(p, n);
    double E = -0.5 * lam * lam * (g * g + std::pow(C / (lam * lam), 2) / (g * g));
    double mu_n = std::sqrt(-2.0 * (E + C)) / lam;
    double nu_n = std::sqrt(-2.0 * (E - C)) / lam;
    return tanh_jacobi_rule(lam, mu_n, nu_n, n).value(x);
  };
  r.potential = [](const Params& p, double x) {
    double lam = p.at("lambda");
    double c = std::cosh(lam * x);
    return p.at("C") * std::tanh(lam * x) + p.at("A") / (c * c);
  };
  r.domain = [](const Params& p) {
    double lam = p.at("lambda");
    return Interval{-28.0 / lam, 28.0 / lam};
  };
  return r;
}

SchrodingerRow make_row_sinusoidal() {
  SchrodingerRow r;
  r.id = "sch_sinusoidal";
  r.title = "hard well with a sinusoidal floor (numeric spectrum)";
  r.param_names = {"V0", "kappa"};
  r.defaults = Params{{"V0", 1.0}, {"kappa", 1.5}};
  auto bands_of = [](const Params& p) {
    double V0 = p.at("V0"), kappa = p.at("kappa");
    jmatrix::TridiagonalBands b;
    b.m = 0.0;
    b.d = [kappa](int n, double E) {
      return 0.5 * kappa * kappa * (n + 1.0) * (n + 1.0) - E;
    };
    b.c = [V0](int, double) { return 0.5 * V0; };
    b.has_prefactor_pole = false;
    b.spec = BasisSpec::jacobi(0.5, 0.5,
                               CoordinateMap::make(MapKind::Cosine, kappa));
    return b;
  };
  r.energy = [bands_of](const Params& p, int n) {
    auto bands = bands_of(p);
    double kappa = p.at("kappa"), V0 = std::abs(p.at("V0"));
    solver::ScanOptions opts;
    opts.max_roots = n + 1;
    double hi = 0.5 * kappa * kappa * (n + 3.0) * (n + 3.0) + 2.0 * V0 + 2.0;
    auto sp = solver::eigenvalue_scan(bands, -V0 - 1.0, hi,
                                      Branch::Positive, opts);
    if (n >= static_cast<int>(sp.entries.size()))
      invalid("level not found in the scan window");
    return sp.entries[n].eps;
  };
  r.bound_count = [](const Params&) { return -1; };
  r.has_wavefunction = true;
  r.wavefunction = [bands_of](const Params& p, int n, double x) {
    const SchrodingerRow& self = find_row("sch_sinusoidal");
    double E = self.energy(p, n);
    auto bands = bands_of(p);
    auto spec = BasisSpec::jacobi(0.5, 0.5,
                                  CoordinateMap::make(MapKind::Cosine, p.at("kappa")));
    auto f = series_coefficients(bands, E, 200);
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
      s += f[j] * basis::basis_upper(spec, static_cast<int>(j), x);
    return s;
  };
  r.potential = [](const Params& p, double x) {
    return p.at("V0") * std::cos(p.at("kappa") * x);
  };
  r.domain = [](const Params& p) {
    return Interval{0.0, 3.14159265358979323846 / p.at("kappa")};
  };
  return r;
}

}  // namespace

const std::vector<SchrodingerRow>& schrodinger_rows() {
  static const std::vector<SchrodingerRow> reg = [] {
    std::vector<SchrodingerRow> v;
    v.push_back(make_row_coulomb());
    v.push_back(make_row_oscillator());
    v.push_back(make_row_morse());
    v.push_back(make_row_hulthen());
    v.push_back(make_row_rosen_morse());
    v.push_back(make_row_sinusoidal());
    return v;
  }();
  return reg;
}

const SchrodingerRow& find_row(const std::string& id) {
  for (const auto& r : schrodinger_rows())
    if (r.id == id) return r;
  throw Error(ErrorKind::UnknownEntry, "no solvable row '" + id + "'");
}

}  // namespace tra::catalog
