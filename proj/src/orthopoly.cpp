#include "tra/orthopoly.hpp"

#include <cmath>

#include "tra/errors.hpp"

namespace tra::orthopoly {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* msg) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, msg);
}
}  // namespace

void PolyFamily::validate() const {
  switch (kind) {
    case PolyKind::Laguerre:
      require(nu > -1.0, "Laguerre requires nu > -1");
      break;
    case PolyKind::Jacobi:
      require(mu > -1.0 && nu > -1.0, "Jacobi requires mu, nu > -1");
      break;
    case PolyKind::MeixnerPollaczek:
      require(mu > 0.0, "Meixner-Pollaczek requires mu > 0");
      if (hyperbolic)
        require(theta > 0.0, "hyperbolic Meixner-Pollaczek requires theta > 0");
      else
        require(theta > 0.0 && theta < kPi,
                "Meixner-Pollaczek requires 0 < theta < pi");
      break;
  }
}

double laguerre_eval(int n, double nu, double y) {
  require(nu > -1.0, "laguerre_eval: nu <= -1");
  require(n >= 0, "laguerre_eval: n < 0");
  if (n == 0) return 1.0;
  double pm = 1.0;
  double p = nu + 1.0 - y;
  for (int k = 1; k < n; ++k) {
    double pn = ((2.0 * k + nu + 1.0 - y) * p - (k + nu) * pm) / (k + 1.0);
    pm = p;
    p = pn;
  }
  return p;
}

double laguerre_deriv(int n, double nu, double y) {
  if (n == 0) return 0.0;
  return -laguerre_eval(n - 1, nu + 1.0, y);
}

double jacobi_eval(int n, double mu, double nu, double y) {
  require(mu > -1.0 && nu > -1.0, "jacobi_eval: parameters <= -1");
  require(n >= 0, "jacobi_eval: n < 0");
  if (std::abs(y) > 1.0 + 1e-14)
    throw Error(ErrorKind::DomainError, "jacobi_eval: |y| > 1");
  if (n == 0) return 1.0;
  double pm = 1.0;
  double p = 0.5 * (mu + nu + 2.0) * y + 0.5 * (mu - nu);
  // For k >= 1 all recurrence denominators are strictly positive (mu,nu > -1),
  // so the degenerate k = 0 coefficients never enter.
  for (int k = 1; k < n; ++k) {
    double t = 2.0 * k + mu + nu;
    double c1 = 2.0 * (k + 1.0) * (k + mu + nu + 1.0) / ((t + 1.0) * (t + 2.0));
    double c2 = (nu * nu - mu * mu) / (t * (t + 2.0));
    double c3 = 2.0 * (k + mu) * (k + nu) / (t * (t + 1.0));
    double pn = ((y - c2) * p - c3 * pm) / c1;
    pm = p;
    p = pn;
  }
  return p;
}

double jacobi_deriv(int n, double mu, double nu, double y) {
  if (n == 0) return 0.0;
  return 0.5 * (n + mu + nu + 1.0) * jacobi_eval(n - 1, mu + 1.0, nu + 1.0, y);
}

double mp_eval(int n, double mu, double z, double theta, bool hyperbolic) {
  require(mu > 0.0, "mp_eval: mu <= 0");
  require(n >= 0, "mp_eval: n < 0");
  if (!hyperbolic)
    require(theta > 0.0 && theta < kPi, "mp_eval: theta outside (0, pi)");
  const double s = hyperbolic ? std::sinh(theta) : std::sin(theta);
  const double c = hyperbolic ? std::cosh(theta) : std::cos(theta);
  if (n == 0) return 1.0;
  double pm = 0.0, p = 1.0;
  for (int k = 0; k < n; ++k) {
    double pn = (2.0 * (z * s + (k + mu) * c) * p -
                 std::sqrt(k * (k + 2.0 * mu - 1.0)) * pm) /
                std::sqrt((k + 1.0) * (k + 2.0 * mu));
    pm = p;
    p = pn;
  }
  return p;
}

std::complex<double> log_gamma(std::complex<double> z) {
  // Lanczos, g = 7, 9 terms. Valid for Re(z) > 0.
  static const double coef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() <= 0.0)
    throw Error(ErrorKind::InvalidParameter, "log_gamma: Re(z) <= 0");
  std::complex<double> x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z - 1.0 + static_cast<double>(i));
  std::complex<double> t = z + 6.5;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

double mp_weight(double z, double mu, double theta) {
  require(mu > 0.0, "mp_weight: mu <= 0");
  require(theta > 0.0 && theta < kPi, "mp_weight: theta outside (0, pi)");
  double log_w = -std::log(2.0 * kPi) - std::lgamma(2.0 * mu) +
                 2.0 * mu * std::log(2.0 * std::sin(theta)) +
                 (2.0 * theta - kPi) * z +
                 2.0 * log_gamma(std::complex<double>(mu, z)).real();
  return std::exp(log_w);
}

double laguerre_norm(int n, double nu) {
  require(nu > -1.0, "laguerre_norm: nu <= -1");
  return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + nu + 1.0)));
}

double jacobi_norm(int n, double mu, double nu) {
  require(mu > -1.0 && nu > -1.0, "jacobi_norm: parameters <= -1");
  // (2n+s+1)Gamma(n+s+1) is written as Gamma(s+2) at n = 0 so that the
  // s = mu+nu = -1 case stays finite.
  const double s = mu + nu;
  double log_top;
  if (n == 0)
    log_top = std::lgamma(s + 2.0);
  else
    log_top = std::log(2.0 * n + s + 1.0) + std::lgamma(n + s + 1.0);
  double log_a2 = log_top + std::lgamma(n + 1.0) - (s + 1.0) * std::log(2.0) -
                  std::lgamma(n + nu + 1.0) - std::lgamma(n + mu + 1.0);
  return std::exp(0.5 * log_a2);
}

}  // namespace tra::orthopoly
