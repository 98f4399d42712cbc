#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "tra/basis.hpp"
#include "tra/catalog.hpp"
#include "tra/errors.hpp"
#include "tra/jmatrix.hpp"
#include "tra/orthopoly.hpp"
#include "tra/quadrature.hpp"
#include "tra/solver.hpp"

using namespace tra;
using catalog::Params;
using solver::Branch;

TEST_CASE("registry lists every configuration and rejects unknown ids") {
  CHECK(catalog::entries().size() == 16);
  CHECK(catalog::schrodinger_rows().size() == 6);
  CHECK_THROWS_AS(catalog::find("nonexistent"), Error);
  CHECK_THROWS_AS(catalog::find_row("nonexistent"), Error);
}

TEST_CASE("every entry matches the finite-difference oracle") {
  solver::OracleOptions opts;
  opts.n_points = 3000;
  opts.max_states = 24;
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    const auto& p = e.defaults;
    auto eff = e.reduced(p);
    auto [lo, hi] = e.eps_window(p, Branch::Positive);
    auto oracle = solver::fd_schrodinger_oracle(eff.u, eff.e_of_eps,
                                                e.oracle_domain(p), lo, hi, opts);
    int levels = e.bound_count(p);
    int check_n = (levels < 0) ? 3 : std::min(levels, 3);
    for (int n = 0; n < check_n; ++n) {
      int oi = e.oracle_index(p, n);
      if (oi < 0) continue;
      REQUIRE(oi < static_cast<int>(oracle.size()));
      double eps = e.spectrum(p, n, Branch::Positive);
      CHECK(std::abs(eps - oracle[oi]) / std::abs(eps) < 1e-4);
    }
  }
}

TEST_CASE("finite spectra end exactly where the oracle runs out of states") {
  solver::OracleOptions opts;
  opts.n_points = 3000;
  opts.max_states = 24;
  for (const char* id : {"graphene_cosh_barrier", "graphene_exp_barrier",
                         "graphene_hulthen_barrier", "spin_rosen_morse"}) {
    const auto& e = catalog::find(id);
    CAPTURE(id);
    const auto& p = e.defaults;
    int count = e.bound_count(p);
    REQUIRE(count > 0);
    CHECK_THROWS_AS(e.spectrum(p, count, Branch::Positive), Error);
    auto eff = e.reduced(p);
    auto [lo, hi] = e.eps_window(p, Branch::Positive);
    auto oracle = solver::fd_schrodinger_oracle(eff.u, eff.e_of_eps,
                                                e.oracle_domain(p), lo, hi, opts);
    CHECK(static_cast<int>(oracle.size()) == count);
  }
}

TEST_CASE("no-symmetry oscillator: scan, implicit relation and ladder condition agree") {
  const auto& e = catalog::find("general_oscillator");
  auto p = e.defaults;  // m = 1, V0 = 1/2, eta = 1, kappa = 1
  auto spec = basis::BasisSpec::laguerre(
      0.5, basis::CoordinateMap::make(basis::MapKind::Quadratic, 0.5));
  auto bands = jmatrix::bands(e.config(p), spec);
  solver::ScanOptions o;
  o.max_roots = 5;
  o.tol = 1e-7;
  auto scan = solver::eigenvalue_scan(bands, 1.0 + 1e-4, 8.0, Branch::Positive, o);
  REQUIRE(scan.entries.size() == 5);
  for (int n = 0; n < 5; ++n) {
    double implicit_eps = e.spectrum(p, n, Branch::Positive);
    // Ladder condition of the two-parameter polynomial family: the scaled
    // spectral variable sits at -(n + 3/4).
    double ladder_eps = solver::implicit_solve(
        [&](double eps) {
          return (1.0 - eps * eps) / (4.0 * std::sqrt((eps + 1.0) * 0.5)) +
                 (n + 0.75);
        },
        1.0 + 1e-9, 40.0, 1e-12);
    CHECK(std::abs(scan.entries[n].eps - implicit_eps) < 1e-6);
    CHECK(std::abs(ladder_eps - implicit_eps) < 1e-8);
  }
}

TEST_CASE("series coefficients reproduce the polynomial family ratios") {
  // For the no-symmetry oscillator the expansion coefficients are the
  // orthonormal two-parameter polynomials evaluated at the spectral point.
  const auto& e = catalog::find("general_oscillator");
  auto p = e.defaults;
  double eps = e.spectrum(p, 2, Branch::Positive);
  auto spec = basis::BasisSpec::laguerre(
      0.5, basis::CoordinateMap::make(basis::MapKind::Quadratic, 0.5));
  auto bands = jmatrix::bands(e.config(p), spec);
  auto f = catalog::series_coefficients(bands, eps, 200);
  double A = 8.0 * (eps + 1.0) * 0.5;  // 8(eps+m)V0/(eta kappa^4)
  double ch = (A + 0.5) / (A - 0.5);
  double th = std::log(ch + std::sqrt(ch * ch - 1.0));
  double xi = (1.0 - eps * eps) / (4.0 * std::sqrt((eps + 1.0) * 0.5));
  for (int j : {1, 2, 3, 5}) {
    double expect = orthopoly::mp_eval(j, 0.75, xi, th, true);
    CHECK(f[j] == doctest::Approx(expect).epsilon(1e-7));
  }
}

TEST_CASE("oscillator pair closed forms") {
  const auto& osc = catalog::find("pseudospin_oscillator");
  auto p = osc.defaults;
  // nu = -1/2 branch carries n + 1/4.
  Params q = p;
  q.set("nu", -0.5);
  double eps = osc.spectrum(q, 1, Branch::Positive);
  double lhs = eps * eps - 1.0;
  double rhs = 4.0 * std::sqrt(2.0 * (eps - 1.0) * 0.5) * (1 + 0.25);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

  // Spin-symmetric twin uses eps + m under the root.
  const auto& spin = catalog::find("spin_oscillator");
  double eps2 = spin.spectrum(spin.defaults, 0, Branch::Positive);
  CHECK(eps2 * eps2 - 1.0 ==
        doctest::Approx(4.0 * std::sqrt((eps2 + 1.0)) * 0.75).epsilon(1e-10));
}

TEST_CASE("ground wavefunctions have the advertised envelopes") {
  // Hyperbolic barrier, n = 0: pure envelope, polynomial part is 1.
  {
    const auto& e = catalog::find("graphene_cosh_barrier");
    auto st = catalog::resolve_state(e, e.defaults, 0, Branch::Positive);
    double alpha = e.defaults.at("alpha");
    double x = 0.7;
    double y = std::tanh(alpha * x);
    double v0 = st.rule.value(0.0);
    double ratio = st.rule.value(x) / v0;
    // Envelope ratio (1-y)^(mu/2)(1+y)^(nu/2) for some positive exponents.
    CHECK(std::isfinite(ratio));
    CHECK(st.rule.value(8.0 / alpha) < v0);  // decays
    CHECK(y > 0.0);
  }
  // Quadratic pair, n = 0, nu = 1/2: A (lam x) exp(-lam^2 x^2 / 2).
  {
    const auto& e = catalog::find("pseudospin_oscillator");
    auto st = catalog::resolve_state(e, e.defaults, 0, Branch::Positive);
    CHECK(st.is_lower);
    double omega = std::sqrt(2.0 * (st.eps - 1.0) * 0.5);
    double lam = std::sqrt(omega);
    for (double x : {0.4, 1.1, -0.8}) {
      double expect = (lam * x) * std::exp(-0.5 * lam * lam * x * x);
      CHECK(st.rule.value(x) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("series wavefunctions are square integrable") {
  for (const char* id : {"spin_sinusoidal", "general_oscillator"}) {
    const auto& e = catalog::find(id);
    auto st = catalog::resolve_state(e, e.defaults, 0, Branch::Positive);
    double norm = quad::integrate(
        [&](double x) { return st.rule.value(x) * st.rule.value(x); },
        st.domain.lo, st.domain.hi, 1e-12, 1e-8);
    CHECK(norm > 0.0);
    CHECK(std::isfinite(norm));
  }
}

TEST_CASE("one-component rows match their reductions") {
  // Closed-form rows against a Richardson-extrapolated discretization of the
  // row potential.
  for (const char* id : {"sch_coulomb_inverse_square", "sch_morse",
                         "sch_hulthen", "sch_rosen_morse",
                         "sch_oscillator_inverse_square"}) {
    const auto& r = catalog::find_row(id);
    CAPTURE(std::string(id));
    const auto& p = r.defaults;
    auto dom = r.domain(p);
    auto pot = [&](double x) { return r.potential(p, x); };
    auto coarse = solver::fd_eigenvalues(pot, dom, 5000, 3);
    auto fine = solver::fd_eigenvalues(pot, dom, 10000, 3);
    int count = r.bound_count(p);
    int check_n = count < 0 ? 2 : std::min(count, 2);
    for (int n = 0; n < check_n; ++n) {
      double en = r.energy(p, n);
      double oracle = (4.0 * fine[n] - coarse[n]) / 3.0;
      CHECK(std::abs(en - oracle) <= 2e-4 * (1.0 + std::abs(en)));
    }
  }
}

TEST_CASE("numeric sinusoidal row agrees with its discretization") {
  const auto& r = catalog::find_row("sch_sinusoidal");
  const auto& p = r.defaults;
  auto dom = r.domain(p);
  auto eigs = solver::fd_eigenvalues([&](double x) { return r.potential(p, x); },
                                     dom, 8000, 2);
  for (int n = 0; n < 2; ++n)
    CHECK(std::abs(r.energy(p, n) - eigs[n]) < 5e-4 * (1.0 + std::abs(eigs[n])));
}

TEST_CASE("validity bounds reject out-of-range requests") {
  const auto& morse = catalog::find("graphene_exp_barrier");
  int count = morse.bound_count(morse.defaults);
  CHECK_THROWS_AS(morse.spectrum(morse.defaults, count + 3, Branch::Positive),
                  Error);
  const auto& cosh_entry = catalog::find("graphene_cosh_barrier");
  Params bad = cosh_entry.defaults;
  bad.set("S0", 0.1);
  bad.set("alpha", 4.0);  // gamma^2 < 0
  CHECK_THROWS_AS(cosh_entry.spectrum(bad, 0, Branch::Positive), Error);
}

TEST_CASE("published-table bands reproduce the headline values") {
  auto bands = catalog::table2_bands(1.0, 0.5, 1.5);
  solver::ScanOptions opts;
  opts.max_roots = 1;
  auto pos = solver::eigenvalue_scan(bands, 1e-3, 2.5, Branch::Positive, opts);
  CHECK(pos.entries[0].eps == doctest::Approx(1.36094).epsilon(4e-6));
  auto neg = solver::eigenvalue_scan(bands, -3.0, -1.001, Branch::Negative, opts);
  CHECK(neg.entries[0].eps == doctest::Approx(-2.36093).epsilon(4e-6));
}
