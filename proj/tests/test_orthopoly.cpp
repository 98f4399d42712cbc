#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tra/errors.hpp"
#include "tra/orthopoly.hpp"
#include "tra/quadrature.hpp"

using namespace tra;
using namespace tra::orthopoly;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("laguerre low-order values") {
  CHECK(laguerre_eval(0, 0.5, 3.7) == 1.0);
  CHECK(laguerre_eval(1, 0.5, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
  double series = oracles::laguerre_series(2, 0.5, 2.0);
  CHECK(laguerre_eval(2, 0.5, 2.0) == doctest::Approx(series).epsilon(1e-12));
}

TEST_CASE("laguerre recurrence equals explicit series up to n = 30") {
  int checked = 0;
  for (double nu : {-0.5, 0.5, 1.25}) {
    for (double y : {0.05, 0.3, 0.9, 1.7, 2.6, 3.8, 5.2}) {
      for (int n : {1, 3, 7, 14, 22, 30}) {
        double cond = 0.0;
        double b = oracles::laguerre_series(n, nu, y, &cond);
        // The explicit sum cancels badly deep in the oscillatory region;
        // compare only where it carries 1e-11 of relative accuracy itself.
        if (cond > 1e4) continue;
        double a = laguerre_eval(n, nu, y);
        CHECK(std::abs(a - b) <= 1e-11 * std::abs(b));
        ++checked;
      }
    }
  }
  CHECK(checked >= 90);
}

TEST_CASE("jacobi low-order values") {
  CHECK(jacobi_eval(0, 0.3, 0.7, -0.2) == 1.0);
  for (auto [mu, nu] : {std::pair{0.3, 0.7}, {0.5, -0.5}, {1.2, 0.1}})
    CHECK(jacobi_eval(1, mu, nu, 1.0) == doctest::Approx(mu + 1.0).epsilon(1e-14));
  double series = oracles::jacobi_series(4, 0.5, 0.5, 0.3);
  CHECK(jacobi_eval(4, 0.5, 0.5, 0.3) == doctest::Approx(series).epsilon(1e-12));
}

TEST_CASE("jacobi recurrence equals explicit series up to n = 30") {
  int checked = 0;
  for (auto [mu, nu] :
       {std::pair{0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}, {0.3, 0.7}}) {
    for (double y : {-0.97, -0.6, -0.25, 0.2, 0.45, 0.8, 0.97}) {
      for (int n : {1, 3, 7, 14, 22, 30}) {
        double cond = 0.0;
        double b = oracles::jacobi_series(n, mu, nu, y, &cond);
        if (cond > 1e4) continue;
        double a = jacobi_eval(n, mu, nu, y);
        CHECK(std::abs(a - b) <= 1e-11 * std::abs(b));
        ++checked;
      }
    }
  }
  CHECK(checked >= 120);
}

TEST_CASE("laguerre orthogonality against the printed normalization") {
  double nu = 0.5;
  auto rule = quad::laguerre_rule(46, nu);
  for (int n = 0; n <= 20; n += 4) {
    for (int m = n; m <= 20; m += 4) {
      double got = rule.integrate([&](double y) {
        return laguerre_eval(n, nu, y) * laguerre_eval(m, nu, y);
      });
      double expect =
          (n == m) ? std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0))
                   : 0.0;
      double scale = std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0));
      CHECK(std::abs(got - expect) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("jacobi orthogonality against the printed normalization") {
  for (auto [mu, nu] : {std::pair{0.5, 0.5}, {0.3, 0.7}, {-0.5, 0.5}}) {
    auto rule = quad::jacobi_rule(46, mu, nu);
    for (int n = 0; n <= 20; n += 5) {
      for (int m = n; m <= 20; m += 5) {
        double got = rule.integrate([&](double y) {
          return jacobi_eval(n, mu, nu, y) * jacobi_eval(m, mu, nu, y);
        });
        double s = mu + nu;
        double log_h = (s + 1.0) * std::log(2.0) -
                       std::log(2.0 * n + s + 1.0) + std::lgamma(n + mu + 1.0) +
                       std::lgamma(n + nu + 1.0) - std::lgamma(n + s + 1.0) -
                       std::lgamma(n + 1.0);
        // Gamma(n+mu+nu+1) at n = 0, mu+nu = -1 needs its cancelled form.
        if (n == 0 && std::abs(s + 1.0) < 1e-12) continue;
        double h = std::exp(log_h);
        double expect = (n == m) ? h : 0.0;
        CHECK(std::abs(got - expect) <= 1e-10 * h);
      }
    }
  }
}

TEST_CASE("derivative identity uses the corrected lower-index term") {
  // As sometimes quoted, the first-derivative relation carries P_n in both
  // right-hand terms; the second term must carry P_{n-1}. Checked against
  // the implemented derivative and finite differences.
  for (auto [mu, nu] : {std::pair{0.3, 0.7}, {0.5, -0.5}}) {
    for (int n : {1, 4, 9}) {
      for (double y : {-0.6, 0.1, 0.8}) {
        double lhs = (1.0 - y * y) * jacobi_deriv(n, mu, nu, y);
        double t = 2.0 * n + mu + nu;
        double rhs = -n * (y + (nu - mu) / t) * jacobi_eval(n, mu, nu, y) +
                     2.0 * (n + mu) * (n + nu) / t * jacobi_eval(n - 1, mu, nu, y);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        auto f = [&](double u) { return jacobi_eval(n, mu, nu, u); };
        double fd = oracles::fd_deriv(f, y, 1e-4);
        CHECK(jacobi_deriv(n, mu, nu, y) == doctest::Approx(fd).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("differential equation residuals stay small") {
  for (int n = 1; n <= 10; n += 3) {
    for (double y : {0.5, 1.5, 4.0})
      CHECK(oracles::laguerre_ode_residual(n, 0.5, y) < 1e-6);
    for (double y : {-0.6, 0.1, 0.7})
      CHECK(oracles::jacobi_ode_residual(n, 0.3, 0.7, y) < 1e-6);
  }
}

TEST_CASE("meixner-pollaczek values and recurrence residual") {
  CHECK(mp_eval(0, 0.9, 1.3, 0.7) == 1.0);
  double mu = 0.8, z = 1.1, th = 0.9;
  double expect = 2.0 * (z * std::sin(th) + mu * std::cos(th)) / std::sqrt(2.0 * mu);
  CHECK(mp_eval(1, mu, z, th) == doctest::Approx(expect).epsilon(1e-14));

  CHECK(oracles::mp_recurrence_residual(10, 0.75, 1.2, 1.0, false) < 1e-10);
  for (int n : {1, 5, 12, 30}) {
    CHECK(oracles::mp_recurrence_residual(n, 0.75, 1.2, 1.0, false) < 1e-10);
    CHECK(oracles::mp_recurrence_residual(n, 0.75, 0.4, 0.8, true) < 1e-10);
    CHECK(oracles::mp_recurrence_residual(n, 1.6, -2.0, 2.2, false) < 1e-10);
  }
}

TEST_CASE("meixner-pollaczek weight function") {
  CHECK(mp_weight(0.0, 1.0, kPi / 2) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
  // At theta = pi/2 the exponential factor drops and the weight is even.
  for (double z : {0.3, 1.0, 2.7})
    CHECK(mp_weight(z, 0.75, kPi / 2) ==
          doctest::Approx(mp_weight(-z, 0.75, kPi / 2)).epsilon(1e-12));
  for (double z : {-3.0, -0.2, 0.0, 1.4})
    CHECK(mp_weight(z, 1.3, 1.0) > 0.0);
}

TEST_CASE("complex log-gamma against closed forms") {
  for (double y : {0.5, 2.0, 5.0, 20.0, 50.0}) {
    double got1 = std::exp(2.0 * log_gamma({1.0, y}).real());
    double expect1 = kPi * y / std::sinh(kPi * y);
    CHECK(got1 == doctest::Approx(expect1).epsilon(1e-12));
    double got2 = std::exp(2.0 * log_gamma({0.5, y}).real());
    double expect2 = kPi / std::cosh(kPi * y);
    CHECK(got2 == doctest::Approx(expect2).epsilon(1e-12));
  }
}

TEST_CASE("normalization constants stay finite at large order") {
  CHECK(std::isfinite(laguerre_norm(120, 0.5)));
  CHECK(std::isfinite(jacobi_norm(120, 0.5, 0.5)));
  CHECK(laguerre_norm(0, 0.5) ==
        doctest::Approx(1.0 / std::sqrt(std::tgamma(1.5))).epsilon(1e-14));
  // mu = nu = -1/2 at n = 0: the (2n+mu+nu+1)Gamma(n+mu+nu+1) product is
  // Gamma(mu+nu+2) = 1.
  double a0 = jacobi_norm(0, -0.5, -0.5);
  double expect = std::sqrt(1.0 / (std::tgamma(0.5) * std::tgamma(0.5)));
  CHECK(a0 == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("parameter domain violations throw") {
  CHECK_THROWS_AS(laguerre_eval(2, -1.5, 1.0), Error);
  CHECK_THROWS_AS(jacobi_eval(2, 0.5, 0.5, 1.5), Error);
  CHECK_THROWS_AS(mp_eval(2, -0.1, 0.0, 1.0), Error);
  CHECK_THROWS_AS(mp_weight(0.0, 1.0, 4.0), Error);
  PolyFamily bad{PolyKind::MeixnerPollaczek, 0.0, 0.5, 5.0, false};
  CHECK_THROWS_AS(bad.validate(), Error);
}
