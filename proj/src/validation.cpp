#include "tra/validation.hpp"

#include <cmath>
#include <functional>

#include "tra/basis.hpp"
#include "tra/catalog.hpp"
#include "tra/emit.hpp"
#include "tra/errors.hpp"
#include "tra/graphene.hpp"
#include "tra/jmatrix.hpp"
#include "tra/orthopoly.hpp"
#include "tra/potentials.hpp"
#include "tra/quadrature.hpp"
#include "tra/solver.hpp"
#include "tra/spinor.hpp"

namespace tra::validation {

namespace {

using basis::BasisSpec;
using basis::CoordinateMap;
using basis::MapKind;
using catalog::Entry;
using catalog::Params;
using potentials::Potential;
using potentials::PotentialConfig;
using solver::Branch;

constexpr double kPi = 3.14159265358979323846;

struct Suite {
  std::vector<CheckResult> results;
  void add(const std::string& entry, const std::string& check, double measured,
           double threshold, const std::string& note = "") {
    results.push_back({entry, check, measured, threshold,
                       measured <= threshold, note});
  }
  void add_report(const std::string& entry, const std::string& check,
                  double measured, const std::string& note) {
    // Informational: records a measured deviation that is expected.
    results.push_back({entry, check, measured, 0.0, true, note});
  }
  void fail(const std::string& entry, const std::string& check,
            const std::string& why) {
    results.push_back({entry, check, 1.0, 0.0, false, why});
  }
};

// ---- orthopoly ----

void check_orthopoly(Suite& s) {
  using namespace orthopoly;
  // Orthogonality against the printed normalizations.
  {
    double nu = 0.5;
    auto rule = quad::laguerre_rule(46, nu);
    double worst = 0.0;
    for (int n = 0; n <= 20; n += 5) {
      for (int m = n; m <= 20; m += 5) {
        double got = rule.integrate([&](double y) {
          return laguerre_eval(n, nu, y) * laguerre_eval(m, nu, y);
        });
        double h = std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0));
        double expect = (n == m) ? h : 0.0;
        worst = std::max(worst, std::abs(got - expect) / h);
      }
    }
    s.add("orthopoly", "laguerre_orthogonality", worst, 1e-10);
  }
  {
    double mu = 0.3, nu = 0.7;
    auto rule = quad::jacobi_rule(46, mu, nu);
    double worst = 0.0;
    for (int n = 0; n <= 20; n += 5) {
      for (int m = n; m <= 20; m += 5) {
        double got = rule.integrate([&](double y) {
          return jacobi_eval(n, mu, nu, y) * jacobi_eval(m, mu, nu, y);
        });
        double log_h = (mu + nu + 1.0) * std::log(2.0) -
                       std::log(2.0 * n + mu + nu + 1.0) +
                       std::lgamma(n + mu + 1.0) + std::lgamma(n + nu + 1.0) -
                       std::lgamma(n + mu + nu + 1.0) - std::lgamma(n + 1.0);
        double h = std::exp(log_h);
        double expect = (n == m) ? h : 0.0;
        worst = std::max(worst, std::abs(got - expect) / h);
      }
    }
    s.add("orthopoly", "jacobi_orthogonality", worst, 1e-10);
  }
  // Recurrence residual of the two-parameter family, both variants.
  {
    double worst = 0.0;
    for (int n : {1, 5, 12, 30}) {
      for (bool hyp : {false, true}) {
        double mu = 0.75, z = hyp ? 0.4 : 1.2, th = hyp ? 0.8 : 1.0;
        double pm = mp_eval(n - 1, mu, z, th, hyp);
        double p = mp_eval(n, mu, z, th, hyp);
        double pp = mp_eval(n + 1, mu, z, th, hyp);
        double sn = hyp ? std::sinh(th) : std::sin(th);
        double cs = hyp ? std::cosh(th) : std::cos(th);
        double lhs = z * sn * p;
        double rhs = -(n + mu) * cs * p +
                     0.5 * (std::sqrt(n * (n + 2.0 * mu - 1.0)) * pm +
                            std::sqrt((n + 1.0) * (n + 2.0 * mu)) * pp);
        double scale = std::abs(lhs) + std::abs((n + mu) * cs * p) + 1.0;
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
      }
    }
    s.add("orthopoly", "mp_recurrence_residual", worst, 1e-10);
  }
  // Complex log-gamma against closed forms.
  {
    double worst = 0.0;
    for (double y : {0.5, 5.0, 20.0, 50.0}) {
      double got = std::exp(2.0 * log_gamma({1.0, y}).real());
      double expect = kPi * y / std::sinh(kPi * y);
      worst = std::max(worst, std::abs(got / expect - 1.0));
      got = std::exp(2.0 * log_gamma({0.5, y}).real());
      expect = kPi / std::cosh(kPi * y);
      worst = std::max(worst, std::abs(got / expect - 1.0));
    }
    s.add("orthopoly", "log_gamma_closed_forms", worst, 1e-12);
  }
}

// ---- basis ----

double gram_entry(const BasisSpec& spec, int n, int m) {
  if (spec.kind == orthopoly::PolyKind::Laguerre) {
    auto rule = quad::laguerre_rule(28, spec.nu);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      double y = rule.nodes[i];
      double x = std::sqrt(y) / spec.map.lambda;
      auto e = spec.map.apply(x);
      double w = std::pow(y, spec.nu) * std::exp(-y);
      acc += rule.weights[i] / w * basis::basis_upper(spec, n, x) *
             basis::basis_upper(spec, m, x) / std::abs(e.yp);
    }
    return spec.map.fold * acc;
  }
  auto rule = quad::jacobi_rule(28, spec.mu, spec.nu);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double y = rule.nodes[i];
    double x = std::acos(y) / spec.map.lambda;
    auto e = spec.map.apply(x);
    double w = std::pow(1.0 - y, spec.mu) * std::pow(1.0 + y, spec.nu);
    acc += rule.weights[i] / w * basis::basis_upper(spec, n, x) *
           basis::basis_upper(spec, m, x) / std::abs(e.yp);
  }
  return acc;
}

void check_basis(Suite& s) {
  std::vector<std::pair<std::string, BasisSpec>> specs;
  specs.emplace_back("laguerre_nu_half",
                     BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Quadratic, 0.75)));
  specs.emplace_back("laguerre_nu_minus_half",
                     BasisSpec::laguerre(-0.5, CoordinateMap::make(MapKind::Quadratic, 0.75)));
  specs.emplace_back("jacobi_half_half",
                     BasisSpec::jacobi(0.5, 0.5, CoordinateMap::make(MapKind::Cosine, 1.5)));
  specs.emplace_back("jacobi_mixed",
                     BasisSpec::jacobi(0.5, -0.5, CoordinateMap::make(MapKind::Cosine, 1.5)));
  for (const auto& [name, spec] : specs) {
    double worst = 0.0;
    for (int n = 0; n <= 20; n += 4)
      for (int m = n; m <= 20; m += 4)
        worst = std::max(worst,
                         std::abs(gram_entry(spec, n, m) - (n == m ? 1.0 : 0.0)));
    s.add("basis", "gram_identity_" + name, worst, 1e-10);
  }
  // Analytic derivative against central differences.
  {
    auto spec = BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Quadratic, 0.6));
    double worst = 0.0;
    for (int n : {0, 3, 8}) {
      for (double x : {-1.7, 0.4, 1.9}) {
        auto f = [&](double t) { return basis::basis_upper(spec, n, t); };
        double h = 1e-3;
        double fd = (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) /
                    (12 * h);
        double an = basis::basis_upper_deriv(spec, n, x);
        worst = std::max(worst, std::abs(an - fd) / (1.0 + std::abs(fd)));
      }
    }
    s.add("basis", "chain_rule_consistency", worst, 1e-7);
  }
  // Constraint enforcement.
  try {
    BasisSpec::laguerre_explicit(0.9, 0.5, 0.5,
                                 CoordinateMap::make(MapKind::Quadratic, 1.0));
    s.fail("basis", "constraint_rejection", "violating spec was accepted");
  } catch (const Error&) {
    s.add("basis", "constraint_rejection", 0.0, 1.0);
  }
}

// ---- jmatrix ----

void check_jmatrix(Suite& s, bool quick) {
  PotentialConfig harm;
  harm.m = 1.0;
  harm.V = Potential::quadratic(0.5);
  auto hspec = BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Quadratic, 0.5));
  auto hbands = jmatrix::bands(harm, hspec);

  double kappa = 1.5;
  PotentialConfig sin_cfg;
  sin_cfg.m = 1.0;
  sin_cfg.V = Potential::cosine(0.5, kappa);
  sin_cfg.S = sin_cfg.V;
  auto sspec = BasisSpec::jacobi(0.5, 0.5, CoordinateMap::make(MapKind::Cosine, kappa));
  auto sbands = jmatrix::bands(sin_cfg, sspec);

  struct Case {
    const char* name;
    const PotentialConfig* cfg;
    const BasisSpec* spec;
    const jmatrix::TridiagonalBands* bands;
  };
  std::vector<Case> cases = {{"oscillator", &harm, &hspec, &hbands},
                             {"sinusoidal", &sin_cfg, &sspec, &sbands}};
  std::vector<double> eps_list = quick ? std::vector<double>{1.4}
                                       : std::vector<double>{1.4, 1.9, 2.6};
  const int nmax = quick ? 4 : 10;
  for (const auto& c : cases) {
    double band_worst = 0.0, tri_worst = 0.0, sym_worst = 0.0;
    for (double eps : eps_list) {
      double scale = 0.0;
      for (int n = 0; n <= nmax; ++n)
        scale = std::max({scale, std::abs(c.bands->d(n, eps)),
                          std::abs(c.bands->c(n, eps))});
      for (int n = 0; n <= nmax; ++n) {
        double dq = jmatrix::element_quadrature(*c.cfg, *c.spec, eps, n, n);
        double cq = jmatrix::element_quadrature(*c.cfg, *c.spec, eps, n, n + 1);
        band_worst = std::max(band_worst,
                              std::abs(c.bands->d(n, eps) - dq) / scale);
        band_worst = std::max(band_worst,
                              std::abs(c.bands->c(n, eps) - cq) / scale);
      }
      for (int n = 0; n <= nmax; n += 2) {
        for (int gap : {2, 3})
          tri_worst = std::max(
              tri_worst,
              std::abs(jmatrix::element_quadrature(*c.cfg, *c.spec, eps, n, n + gap)) /
                  scale);
        sym_worst = std::max(
            sym_worst,
            std::abs(jmatrix::element_quadrature(*c.cfg, *c.spec, eps, n, n + 1) -
                     jmatrix::element_quadrature(*c.cfg, *c.spec, eps, n + 1, n)) /
                scale);
      }
    }
    s.add("jmatrix", std::string("band_oracle_agreement_") + c.name, band_worst, 1e-8);
    s.add("jmatrix", std::string("tridiagonality_") + c.name, tri_worst, 1e-8);
    s.add("jmatrix", std::string("symmetry_") + c.name, sym_worst, 1e-8);
  }
  // The full two-component pairing spills outside the bands when V != S.
  {
    double eps = 1.4;
    double scale = std::abs(hbands.d(0, eps));
    double spill = std::abs(jmatrix::element_quadrature(
        harm, hspec, eps, 0, 2, jmatrix::ElementForm::FullGalerkin));
    s.results.push_back({"jmatrix", "kinetic_balance_necessity", spill,
                         1e-3 * scale, spill > 1e-3 * scale,
                         "lower-lower channel must break tridiagonality"});
  }
}

// ---- solver ----

void check_solver(Suite& s, bool quick) {
  auto bands = catalog::sinusoidal_bands(1.0, 0.5, 1.5);
  // Determinant/recursion proportionality: f_N prod c = +- D_{N-1}.
  {
    double worst = 0.0;
    for (double eps : {1.3, 1.9, 2.4, -1.7, 3.3, 0.7, 2.9, -3.1, 1.1, 4.2}) {
      int N = 18;
      auto run = solver::recursion_run(bands, eps, N);
      double log_prod = 0.0;
      double sign_prod = 1.0;
      for (int k = 0; k < N; ++k) {
        double ck = bands.c(k, eps);
        log_prod += std::log(std::abs(ck));
        if (ck < 0) sign_prod = -sign_prod;
      }
      auto det = solver::determinant(bands, eps, N - 1);
      double lhs_log = std::log(std::abs(run.f[N])) + run.log_scale[N] + log_prod;
      double rel = std::abs(lhs_log - det.log_abs) / (std::abs(det.log_abs) + 1.0);
      double fsign = (run.f[N] > 0 ? 1.0 : -1.0) * sign_prod;
      int parity = N % 2 == 0 ? 1 : -1;  // f_N = (-1)^N D_{N-1}/prod c
      if (fsign * parity != det.sign && det.sign != 0) rel = 1.0;
      worst = std::max(worst, rel);
    }
    s.add("solver", "recursion_matches_minors", worst, 1e-9);
  }
  // Scan grid halving stability.
  {
    solver::ScanOptions a;
    a.max_roots = 5;
    solver::ScanOptions b = a;
    b.scan_points = 2 * a.scan_points;
    auto sa = solver::eigenvalue_scan(bands, 1e-3, 9.0, Branch::Positive, a);
    auto sb = solver::eigenvalue_scan(bands, 1e-3, 9.0, Branch::Positive, b);
    double worst = std::abs(static_cast<int>(sa.entries.size()) -
                            static_cast<int>(sb.entries.size()));
    for (std::size_t i = 0; i < std::min(sa.entries.size(), sb.entries.size()); ++i)
      worst = std::max(worst, std::abs(sa.entries[i].eps - sb.entries[i].eps));
    s.add("solver", "scan_grid_stability", worst, 1e-8);
  }
  // Sturm-style cross-check: minor sign agreements change by one across a root.
  {
    solver::ScanOptions opts;
    opts.max_roots = 4;
    auto sp = solver::eigenvalue_scan(bands, 1e-3, 7.0, Branch::Positive, opts);
    bool ok = sp.entries.size() >= 2;
    if (ok) {
      for (std::size_t i = 0; i + 1 < sp.entries.size(); ++i) {
        double mid1 = (i == 0) ? sp.entries[0].eps - 0.3
                               : 0.5 * (sp.entries[i - 1].eps + sp.entries[i].eps);
        double mid2 = 0.5 * (sp.entries[i].eps + sp.entries[i + 1].eps);
        int a = solver::minor_sign_agreements(bands, mid1, 40);
        int b = solver::minor_sign_agreements(bands, mid2, 40);
        if (std::abs(a - b) != 1) ok = false;
      }
    }
    s.results.push_back({"solver", "sturm_cross_check", ok ? 0.0 : 1.0, 0.5, ok,
                         "sign-agreement count steps by one per root"});
  }
  // Parallel scan kernel equals the serial reference bitwise.
  {
    std::vector<double> grid(301);
    for (int i = 0; i <= 300; ++i) grid[i] = 1e-3 + i * (8.0 / 300);
    auto par = solver::scan_determinants(bands, grid, 48, true);
    auto ser = solver::scan_determinants(bands, grid, 48, false);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (par[i].sign != ser[i].sign || par[i].log_abs != ser[i].log_abs)
        worst = 1.0;
    }
    s.add("solver", "parallel_serial_identical", worst, 0.5);
  }
  // N-convergence of the reference-table workload.
  if (!quick) {
    auto tb = catalog::table2_bands(1.0, 0.5, 1.5);
    solver::ScanOptions o;
    o.max_roots = 10;
    o.N_start = 20;
    o.N_max = 40;
    o.tol = 1e-6;
    try {
      auto sp = solver::eigenvalue_scan(tb, 1e-3, 17.0, Branch::Positive, o);
      double worst = 0.0;
      for (const auto& e : sp.entries) worst = std::max(worst, e.delta_converge);
      s.add("solver", "table2_N20_to_N40_convergence", worst, 1e-6);
    } catch (const Error& err) {
      s.fail("solver", "table2_N20_to_N40_convergence", err.what());
    }
  }
}

// ---- catalog ----

void check_catalog(Suite& s, bool quick) {
  solver::OracleOptions opts;
  opts.n_points = quick ? 1500 : 3000;
  opts.max_states = 24;
  for (const auto& e : catalog::entries()) {
    const auto& p = e.defaults;
    try {
      auto eff = e.reduced(p);
      auto [lo, hi] = e.eps_window(p, Branch::Positive);
      auto dom = e.oracle_domain(p);
      auto oracle = solver::fd_schrodinger_oracle(eff.u, eff.e_of_eps, dom, lo, hi, opts);
      int levels = e.bound_count(p);
      int check_n = (levels < 0) ? 3 : std::min(levels, 3);
      double worst = 0.0;
      for (int n = 0; n < check_n; ++n) {
        int oi = e.oracle_index(p, n);
        if (oi < 0) continue;
        if (oi >= static_cast<int>(oracle.size())) {
          worst = 1.0;
          break;
        }
        double eps = e.spectrum(p, n, Branch::Positive);
        worst = std::max(worst, std::abs(eps - oracle[oi]) / std::abs(eps));
      }
      s.add(e.id, "spectrum_vs_oracle", worst, 1e-4);
      if (levels >= 0 && e.count_exhaustive) {
        // Every oracle root must be a formula level and vice versa.
        int expected_top = e.oracle_index(p, levels - 1);
        bool count_ok = static_cast<int>(oracle.size()) == expected_top + 1;
        s.results.push_back({e.id, "bound_count_vs_oracle",
                             static_cast<double>(oracle.size()),
                             static_cast<double>(expected_top + 1), count_ok,
                             "finite spectrum size"});
      }
    } catch (const Error& err) {
      s.fail(e.id, "spectrum_vs_oracle", err.what());
    }
  }
  // Triple-route agreement for the no-symmetry oscillator.
  {
    const auto& e = catalog::find("general_oscillator");
    auto p = e.defaults;
    auto spec = BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Quadratic, 0.5));
    PotentialConfig cfg;
    cfg.m = p.at("m");
    cfg.V = Potential::quadratic(p.at("V0"));
    auto bands = jmatrix::bands(cfg, spec);
    solver::ScanOptions o;
    o.max_roots = 5;
    o.tol = 1e-7;
    auto scan = solver::eigenvalue_scan(bands, p.at("m") + 1e-4, 8.0,
                                        Branch::Positive, o);
    double worst = 0.0;
    for (int n = 0; n < 5; ++n) {
      double implicit_eps = e.spectrum(p, n, Branch::Positive);
      double mp_eps = solver::implicit_solve(
          [&](double eps) {
            return (1.0 - eps * eps) / (4.0 * std::sqrt((eps + 1.0) * 0.5)) +
                   (n + 0.75);
          },
          1.0 + 1e-9, 40.0, 1e-12);
      worst = std::max(worst, std::abs(scan.entries[n].eps - implicit_eps));
      worst = std::max(worst, std::abs(mp_eps - implicit_eps));
    }
    s.add("general_oscillator", "three_route_agreement", worst, 1e-6);
  }
  // Published-table convention vs wave-operator route (documented deviation).
  {
    auto tb = catalog::table2_bands(1.0, 0.5, 1.5);
    solver::ScanOptions o;
    o.max_roots = 1;
    auto pub = solver::eigenvalue_scan(tb, 1e-3, 4.0, Branch::Positive, o);
    const auto& e = catalog::find("spin_sinusoidal");
    double phys = e.spectrum(e.defaults, 0, Branch::Positive);
    s.add_report("spin_sinusoidal", "published_table_vs_wave_operator",
                 std::abs(pub.entries[0].eps - phys),
                 "published-table convention and the wave-operator bands "
                 "disagree; table2 reproduces the published numbers");
  }
  // Printed-form deviations picked up by the oracle cross-checks.
  {
    const auto& e = catalog::find("graphene_constant_field");
    double g = e.defaults.at("B0");
    double ladder = e.spectrum(e.defaults, 0, Branch::Positive);
    double printed = std::sqrt(2.0 * g + g * (2.0 * 0 + 1.0));
    s.add_report("graphene_constant_field", "printed_spectrum_deviation",
                 std::abs(printed - ladder),
                 "quoted 2*gamma + omega(2n+1) grouping fails the oracle; the "
                 "ladder 2*gamma*(n+1) is used");
  }
}

// ---- spinor residual gate ----

void check_residuals(Suite& s, bool quick) {
  for (const auto& e : catalog::entries()) {
    if (!e.has_wavefunction) continue;
    const auto& p = e.defaults;
    int start = (e.id == "graphene_inverse_square_field") ? 1 : 0;
    int count = quick ? 1 : 2;
    for (int lvl = start; lvl < start + count; ++lvl) {
      try {
        auto st = catalog::resolve_state(e, p, lvl, Branch::Positive);
        auto grid = spinor::uniform_grid(st.domain.lo, st.domain.hi, 4096);
        auto cfg = e.residual_config(p);
        spinor::SpinorField f =
            st.is_lower ? spinor::assemble_from_lower(st.rule, cfg, st.eps, grid)
                        : spinor::assemble(st.rule, cfg, st.eps, grid);
        f = spinor::normalize(f);
        double r = spinor::dirac_residual(f, cfg);
        s.add(e.id, "dirac_residual_n" + std::to_string(lvl), r, 1e-6);
        spinor::SpinorField detuned = f;
        detuned.eps = st.eps + 0.1;
        double rd = spinor::dirac_residual(detuned, cfg);
        s.results.push_back({e.id, "detuning_sensitivity_n" + std::to_string(lvl),
                             rd, 1e-2, rd > 1e-2,
                             "residual must blow up off the eigenvalue"});
      } catch (const Error& err) {
        s.fail(e.id, "dirac_residual_n" + std::to_string(lvl), err.what());
      }
    }
  }
}

// ---- graphene ----

void check_graphene(Suite& s) {
  using graphene::FieldFamily;
  using graphene::FieldProfile;
  // Antiderivative map: dS/dx must be proportional to B(x).
  double worst = 0.0;
  for (FieldFamily fam : {FieldFamily::Constant, FieldFamily::CoshBarrier,
                          FieldFamily::ExpDecay, FieldFamily::Hulthen,
                          FieldFamily::SecSquared, FieldFamily::SinhSquared}) {
    FieldProfile prof;
    prof.family = fam;
    prof.B0 = 0.8;
    prof.alpha = 0.9;
    prof.k = 1.0;
    auto cfg = graphene::field_to_scalar(prof);
    for (double x : {0.4, 1.1, 1.6}) {
      double b = graphene::field_value(prof, x);
      double ds = cfg.S.deriv(x);
      worst = std::max(worst, std::abs(ds - b) / (1.0 + std::abs(b)));
    }
  }
  s.add("graphene", "field_antiderivative", worst, 1e-8);
  // Dimensionless scales leave the catalog value untouched.
  {
    FieldProfile prof;
    prof.family = FieldFamily::CoshBarrier;
    prof.B0 = 2.8;
    prof.alpha = 0.7;
    prof.k = 0.2;
    double via_graphene = graphene::landau_spectrum(prof, 0, Branch::Positive);
    const auto& entry = catalog::find("graphene_cosh_barrier");
    double direct = entry.spectrum(entry.defaults, 0, Branch::Positive);
    s.add("graphene", "landau_equals_catalog", std::abs(via_graphene - direct),
          1e-12);
  }
}

}  // namespace

std::vector<CheckResult> run_all(bool quick) {
  Suite s;
  check_orthopoly(s);
  check_basis(s);
  check_jmatrix(s, quick);
  check_solver(s, quick);
  check_catalog(s, quick);
  check_residuals(s, quick);
  check_graphene(s);
  return s.results;
}

std::string report_text(const std::vector<CheckResult>& results) {
  std::string out = "entry,check,measured,threshold,pass,note\n";
  for (const auto& r : results) {
    out += r.entry + ',' + r.check + ',' + emit::format_number(r.measured) +
           ',' + emit::format_number(r.threshold) + ',' +
           (r.pass ? "true" : "false") + ",\"" + r.note + "\"\n";
  }
  return out;
}

}  // namespace tra::validation
