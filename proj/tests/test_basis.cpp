#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tra/basis.hpp"
#include "tra/errors.hpp"
#include "tra/quadrature.hpp"

using namespace tra;
using basis::BasisSpec;
using basis::CoordinateMap;
using basis::MapKind;

namespace {

// x-space Gram matrix entry via the y-space Gauss rule matched to the weight;
// the measure-converted integrand is a polynomial, so the rule is exact.
double gram_entry(const BasisSpec& spec, int n, int m) {
  const int order = 28;
  if (spec.kind == orthopoly::PolyKind::Laguerre) {
    auto rule = quad::laguerre_rule(order, spec.nu);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      double y = rule.nodes[i];
      double x = std::sqrt(y) / spec.map.lambda;
      auto e = spec.map.apply(x);
      double w = std::pow(y, spec.nu) * std::exp(-y);
      s += rule.weights[i] / w * basis::basis_upper(spec, n, x) *
           basis::basis_upper(spec, m, x) / std::abs(e.yp);
    }
    return spec.map.fold * s;
  }
  auto rule = quad::jacobi_rule(order, spec.mu, spec.nu);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double y = rule.nodes[i];
    double x = std::acos(y) / spec.map.lambda;
    auto e = spec.map.apply(x);
    double w = std::pow(1.0 - y, spec.mu) * std::pow(1.0 + y, spec.nu);
    s += rule.weights[i] / w * basis::basis_upper(spec, n, x) *
         basis::basis_upper(spec, m, x) / std::abs(e.yp);
  }
  return s;
}

}  // namespace

TEST_CASE("coordinate map values and derivatives") {
  auto tanh_map = CoordinateMap::make(MapKind::Tanh, 1.0);
  auto e = tanh_map.apply(0.0);
  CHECK(e.y == 0.0);
  CHECK(e.yp == 1.0);
  CHECK(e.ypp == 0.0);

  auto quad_map = CoordinateMap::make(MapKind::Quadratic, 2.0);
  e = quad_map.apply(1.0);
  CHECK(e.y == 4.0);
  CHECK(e.yp == 8.0);
  CHECK(e.ypp == 8.0);

  auto se = CoordinateMap::make(MapKind::ShiftedExp, 1.0);
  CHECK(se.apply(40.0).y == doctest::Approx(1.0).epsilon(1e-12));

  // Cosine map covers the full Jacobi range over [0, pi/lambda].
  auto cosine = CoordinateMap::make(MapKind::Cosine, 1.5);
  CHECK(cosine.apply(cosine.x_min).y == doctest::Approx(1.0));
  CHECK(cosine.apply(cosine.x_max).y == doctest::Approx(-1.0));
  CHECK_THROWS_AS(cosine.apply(cosine.x_max + 0.1), Error);
}

TEST_CASE("derived map constants obey the derivative forms") {
  // Laguerre lane: y' = kappa y^a e^{by}; Jacobi lane: y' = kappa(1-y)^a(1+y)^b.
  for (double x : {0.4, 1.1, 2.3}) {
    auto m1 = CoordinateMap::make(MapKind::Quadratic, 0.8);
    auto e1 = m1.apply(x);
    CHECK(e1.yp == doctest::Approx(m1.kappa * std::pow(e1.y, m1.a)).epsilon(1e-12));

    auto m2 = CoordinateMap::make(MapKind::Cosine, 1.2);
    if (x < m2.x_max) {
      auto e2 = m2.apply(x);
      CHECK(e2.yp == doctest::Approx(m2.kappa * std::pow(1.0 - e2.y, m2.a) *
                                     std::pow(1.0 + e2.y, m2.b)).epsilon(1e-12));
    }

    auto m3 = CoordinateMap::make(MapKind::Tanh, 0.9);
    auto e3 = m3.apply(x);
    CHECK(e3.yp == doctest::Approx(m3.kappa * std::pow(1.0 - e3.y, m3.a) *
                                   std::pow(1.0 + e3.y, m3.b)).epsilon(1e-12));

    auto m4 = CoordinateMap::make(MapKind::ExpDecay, 0.7, 2.0);
    auto e4 = m4.apply(x);
    CHECK(e4.yp == doctest::Approx(m4.kappa * e4.y).epsilon(1e-12));

    auto m5 = CoordinateMap::make(MapKind::ShiftedExp, 1.1);
    auto e5 = m5.apply(x);
    CHECK(e5.yp == doctest::Approx(m5.kappa * (1.0 - e5.y)).epsilon(1e-12));
  }
}

TEST_CASE("gram matrices of registered bases are the identity") {
  std::vector<BasisSpec> specs;
  auto qmap = CoordinateMap::make(MapKind::Quadratic, 0.75);
  specs.push_back(BasisSpec::laguerre(0.5, qmap));
  specs.push_back(BasisSpec::laguerre(-0.5, qmap));
  auto cmap = CoordinateMap::make(MapKind::Cosine, 1.5);
  specs.push_back(BasisSpec::jacobi(0.5, 0.5, cmap));
  specs.push_back(BasisSpec::jacobi(-0.5, -0.5, cmap));
  specs.push_back(BasisSpec::jacobi(0.5, -0.5, cmap));

  for (const auto& spec : specs) {
    for (int n = 0; n <= 20; n += 2) {
      for (int m = n; m <= 20; m += 3) {
        double g = gram_entry(spec, n, m);
        double expect = (n == m) ? 1.0 : 0.0;
        CHECK(std::abs(g - expect) < 1e-10);
      }
    }
  }
}

TEST_CASE("analytic derivative matches central differences") {
  auto qspec = BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Quadratic, 0.6));
  auto cspec = BasisSpec::jacobi(0.5, -0.5, CoordinateMap::make(MapKind::Cosine, 1.1));
  for (int n : {0, 1, 4, 9}) {
    for (double x : {-2.1, -0.7, 0.35, 1.4, 2.8}) {
      auto f = [&](double t) { return basis::basis_upper(qspec, n, t); };
      double fd = oracles::fd_deriv(f, x, 1e-3);
      double an = basis::basis_upper_deriv(qspec, n, x);
      CHECK(std::abs(an - fd) <= 1e-7 * (1.0 + std::abs(fd)));
    }
    for (double x : {0.4, 1.0, 1.9, 2.5}) {
      auto f = [&](double t) { return basis::basis_upper(cspec, n, t); };
      double fd = oracles::fd_deriv(f, x, 1e-4);
      double an = basis::basis_upper_deriv(cspec, n, x);
      CHECK(std::abs(an - fd) <= 1e-7 * (1.0 + std::abs(fd)));
    }
  }
}

TEST_CASE("constraint violations are rejected at construction") {
  auto qmap = CoordinateMap::make(MapKind::Quadratic, 1.0);
  auto good = BasisSpec::laguerre(0.5, qmap);
  CHECK_THROWS_AS(
      BasisSpec::laguerre_explicit(good.alpha + 0.1, good.beta, 0.5, qmap), Error);
  CHECK_THROWS_AS(
      BasisSpec::laguerre_explicit(good.alpha, good.beta - 0.2, 0.5, qmap), Error);

  auto cmap = CoordinateMap::make(MapKind::Cosine, 1.0);
  auto jgood = BasisSpec::jacobi(0.5, 0.5, cmap);
  CHECK_THROWS_AS(BasisSpec::jacobi_explicit(jgood.alpha + 0.05, jgood.beta, 0.5,
                                             0.5, cmap), Error);

  // Maps that cannot give an x-orthonormal basis under the constraints.
  CHECK_THROWS_AS(BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Linear, 1.0)),
                  Error);
  CHECK_THROWS_AS(BasisSpec::jacobi(0.5, 0.5, CoordinateMap::make(MapKind::Tanh, 1.0)),
                  Error);
}

TEST_CASE("endpoint limits are safe or reported") {
  auto qmap = CoordinateMap::make(MapKind::Quadratic, 1.0);
  auto odd = BasisSpec::laguerre(0.5, qmap);
  CHECK(basis::basis_upper(odd, 3, 0.0) == 0.0);  // vanishing positive exponent
  auto even = BasisSpec::laguerre(-0.5, qmap);
  CHECK(std::isfinite(basis::basis_upper(even, 3, 0.0)));  // exponent 0
  auto sing = BasisSpec::laguerre(-0.8, qmap);  // negative envelope exponent
  CHECK_THROWS_AS(basis::basis_upper(sing, 0, 0.0), Error);
  CHECK(std::isfinite(basis::basis_upper(sing, 0, 0.2)));
}

TEST_CASE("odd-parity continuation across the origin") {
  auto spec = BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Quadratic, 0.9));
  for (int n : {0, 2, 5})
    CHECK(basis::basis_upper(spec, n, -1.3) ==
          doctest::Approx(-basis::basis_upper(spec, n, 1.3)).epsilon(1e-14));
  auto even = BasisSpec::laguerre(-0.5, CoordinateMap::make(MapKind::Quadratic, 0.9));
  CHECK(basis::basis_upper(even, 3, -1.3) ==
        doctest::Approx(basis::basis_upper(even, 3, 1.3)).epsilon(1e-14));
}

TEST_CASE("kinetic-balance lower components") {
  auto spec = BasisSpec::laguerre(0.5, CoordinateMap::make(MapKind::Quadratic, 0.5));
  double m = 1.0, eps = 1.7;

  SUBCASE("eta = 0 kills the lower component") {
    auto off = spec;
    off.eta = 0.0;
    for (double x : {-1.0, 0.3, 2.0})
      CHECK(basis::basis_lower(off, 2, x, nullptr, eps, m) == 0.0);
  }

  SUBCASE("constant W is the definition") {
    double w0 = 0.8;
    for (double x : {-1.2, 0.4, 1.8}) {
      double expect = spec.eta / (m + eps) *
                      (w0 * basis::basis_upper(spec, 1, x) +
                       basis::basis_upper_deriv(spec, 1, x));
      double got = basis::basis_lower(spec, 1, x, [w0](double) { return w0; },
                                      eps, m);
      CHECK(got == doctest::Approx(expect).epsilon(1e-14));
    }
  }

  SUBCASE("harmonic ground state against the closed-form derivative") {
    // phi_0 = A (kappa x/2) e^{-kappa^2 x^2/8} for nu = 1/2, so
    // phi_0' = A (kappa/2)(1 - kappa^2 x^2/4) e^{-kappa^2 x^2/8}.
    double kappa = spec.map.kappa;
    double A = spec.norm_constant(0);
    for (double x : {-1.5, 0.2, 0.9, 2.2}) {
      double closed = A * (kappa / 2.0) * (1.0 - kappa * kappa * x * x / 4.0) *
                      std::exp(-kappa * kappa * x * x / 8.0);
      double got = basis::basis_lower(spec, 0, x, nullptr, eps, m);
      CHECK(got == doctest::Approx(spec.eta / (m + eps) * closed).epsilon(1e-12));
      auto f = [&](double t) { return basis::basis_upper(spec, 0, t); };
      double fd = oracles::fd_deriv(f, x, 1e-3);
      CHECK(got == doctest::Approx(spec.eta / (m + eps) * fd).epsilon(1e-8));
    }
  }

  SUBCASE("eps = -m is singular") {
    CHECK_THROWS_AS(basis::basis_lower(spec, 0, 0.5, nullptr, -1.0, 1.0), Error);
  }
}

TEST_CASE("gauge phase accumulation") {
  CHECK(basis::gauge_away([](double) { return 0.0; }, 0.0, 3.0) == 0.0);
  double u = 0.37;
  CHECK(basis::gauge_away([u](double) { return u; }, 0.0, 2.5) ==
        doctest::Approx(u * 2.5).epsilon(1e-12));
  CHECK(basis::gauge_away([](double t) { return std::cos(t); }, 0.0, 1.9) ==
        doctest::Approx(std::sin(1.9)).epsilon(1e-10));
}
