#include "tra/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tra/errors.hpp"

namespace tra::quad {

int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  // LDL^T pivot signs; a nonpositive pivot marks an eigenvalue below x.
  const double tiny = 1e-300;
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double off2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
    q = d[i] - x - off2 / q;
    if (q == 0.0) q = tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_lowest_eigenvalues(const std::vector<double>& d,
                                               const std::vector<double>& e,
                                               std::size_t k, double tol) {
  const std::size_t n = d.size();
  if (k > n) k = n;
  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  std::vector<double> eigs(k);
  for (std::size_t idx = 0; idx < k; ++idx) {
    double a = lo, b = hi;
    while (b - a > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
      double m = 0.5 * (a + b);
      if (sturm_count(d, e, m) > static_cast<int>(idx))
        b = m;
      else
        a = m;
    }
    eigs[idx] = 0.5 * (a + b);
  }
  return eigs;
}

GaussRule gauss_from_recurrence(const std::vector<double>& a,
                                const std::vector<double>& beta, double mu0) {
  const std::size_t n = a.size();
  std::vector<double> off(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i) off[i] = std::sqrt(beta[i + 1]);

  GaussRule rule;
  rule.nodes = tridiag_lowest_eigenvalues(a, off, n, 1e-15);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Christoffel number via the orthonormal recurrence.
    const double x = rule.nodes[i];
    double pm = 0.0, p = 1.0 / std::sqrt(mu0);
    double s = p * p;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      double pn = ((x - a[k]) * p - (k > 0 ? off[k - 1] : 0.0) * pm) / off[k];
      pm = p;
      p = pn;
      s += p * p;
    }
    rule.weights[i] = 1.0 / s;
  }
  return rule;
}

GaussRule laguerre_rule(std::size_t n, double nu) {
  if (nu <= -1.0) throw Error(ErrorKind::InvalidParameter, "laguerre_rule: nu <= -1");
  std::vector<double> a(n), beta(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = 2.0 * k + nu + 1.0;
    beta[k] = k == 0 ? 0.0 : k * (k + nu);
  }
  return gauss_from_recurrence(a, beta, std::exp(std::lgamma(nu + 1.0)));
}

GaussRule jacobi_rule(std::size_t n, double mu, double nu) {
  if (mu <= -1.0 || nu <= -1.0)
    throw Error(ErrorKind::InvalidParameter, "jacobi_rule: parameters <= -1");
  std::vector<double> a(n), beta(n);
  const double s = mu + nu;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      a[k] = (nu - mu) / (s + 2.0);
      beta[k] = 0.0;
    } else {
      double t = 2.0 * k + s;
      a[k] = (nu * nu - mu * mu) / (t * (t + 2.0));
      if (k == 1)
        beta[k] = 4.0 * (mu + 1.0) * (nu + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
      else
        beta[k] = 4.0 * k * (k + mu) * (k + nu) * (k + s) /
                  (t * t * (t + 1.0) * (t - 1.0));
    }
  }
  double mu0 = std::exp((s + 1.0) * std::log(2.0) + std::lgamma(mu + 1.0) +
                        std::lgamma(nu + 1.0) - std::lgamma(s + 2.0));
  return gauss_from_recurrence(a, beta, mu0);
}

GaussRule legendre_rule(std::size_t n) { return jacobi_rule(n, 0.0, 0.0); }

namespace {

// QUADPACK (G7,K15) abscissae and weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Segment {
  double a, b, value, error;
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = resk * h;
  s.error = std::abs((resk - resg) * h);
  return s;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
  if (a == b) return 0.0;
  std::vector<Segment> segs{gk15(f, a, b)};
  const int max_segments = 4000;
  for (int iter = 0; iter < max_segments; ++iter) {
    double total = 0.0, err = 0.0, l1 = 0.0;
    for (const auto& s : segs) {
      total += s.value;
      err += s.error;
      l1 += std::abs(s.value);
    }
    // The error estimates bottom out near roundoff of the L1 mass; a
    // cancelling integral cannot be resolved below that floor.
    double floor = std::max(abs_tol, 100.0 * 2.2e-16 * l1);
    if (err <= std::max(floor, rel_tol * std::abs(total))) return total;
    // Split the segment with the largest error estimate.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    Segment w = segs[worst];
    if (w.b - w.a < 1e-15 * (std::abs(w.a) + std::abs(w.b) + 1.0))
      throw Error(ErrorKind::IntegrationError, "interval too small to refine");
    double m = 0.5 * (w.a + w.b);
    segs[worst] = gk15(f, w.a, m);
    segs.push_back(gk15(f, m, w.b));
  }
  throw Error(ErrorKind::IntegrationError, "adaptive quadrature did not converge");
}

double integrate_half_line(const std::function<double(double)>& f, double a,
                           double abs_tol, double rel_tol) {
  auto g = [&](double t) {
    double u = 1.0 - t;
    double x = a + t / u;
    return f(x) / (u * u);
  };
  return integrate(g, 0.0, 1.0 - 1e-14, abs_tol, rel_tol);
}

double integrate_real_line(const std::function<double(double)>& f,
                           double abs_tol, double rel_tol) {
  auto g = [&](double t) {
    double u = 1.0 - t * t;
    double x = t / u;
    return f(x) * (1.0 + t * t) / (u * u);
  };
  return integrate(g, -1.0 + 1e-14, 1.0 - 1e-14, abs_tol, rel_tol);
}

}  // namespace tra::quad
