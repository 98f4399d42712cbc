#include "tra/solver.hpp"

#include <algorithm>
#include <cmath>

#include "tra/errors.hpp"
#include "tra/quadrature.hpp"

namespace tra::solver {

RecursionResult recursion_run(const jmatrix::TridiagonalBands& bands, double eps,
                              int N, RecursionSeed seed) {
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "recursion_run: N < 1");
  RecursionResult r;
  r.f.resize(N + 1);
  r.log_scale.resize(N + 1, 0.0);
  double fm = seed.f_minus1;
  double f0 = seed.f_0;
  r.f[0] = f0;
  double log_scale = 0.0;
  for (int n = 0; n < N; ++n) {
    double cn = bands.c(n, eps);
    if (cn == 0.0)
      throw Error(ErrorKind::RecursionBreakdown,
                  "c(" + std::to_string(n) + ") = 0, cannot advance");
    double cprev = (n == 0) ? 0.0 : bands.c(n - 1, eps);
    double fn1 = -(bands.d(n, eps) * f0 + cprev * fm) / cn;
    fm = f0;
    f0 = fn1;
    if ((n + 1) % 32 == 0) {
      double mag = std::max(std::abs(fm), std::abs(f0));
      if (mag > 0.0 && (mag > 1e100 || mag < 1e-100)) {
        fm /= mag;
        f0 /= mag;
        log_scale += std::log(mag);
      }
    }
    r.f[n + 1] = f0;
    r.log_scale[n + 1] = log_scale;
  }
  return r;
}

DetValue determinant(const jmatrix::TridiagonalBands& bands, double eps, int N) {
  // Leading principal minors: D_k = d_k D_{k-1} - c_{k-1}^2 D_{k-2},
  // rescaled to stay in range. Only the sign and log-magnitude survive.
  double dm2 = 1.0, dm1 = bands.d(0, eps);
  double log_scale = 0.0;
  for (int k = 1; k <= N; ++k) {
    double ck = bands.c(k - 1, eps);
    double dk = bands.d(k, eps) * dm1 - ck * ck * dm2;
    dm2 = dm1;
    dm1 = dk;
    double mag = std::max(std::abs(dm1), std::abs(dm2));
    if (mag > 1e120 || (mag > 0.0 && mag < 1e-120)) {
      dm1 /= mag;
      dm2 /= mag;
      log_scale += std::log(mag);
    }
  }
  DetValue v;
  v.sign = (dm1 > 0.0) - (dm1 < 0.0);
  v.log_abs = (dm1 == 0.0) ? -std::numeric_limits<double>::infinity()
                           : log_scale + std::log(std::abs(dm1));
  return v;
}

int minor_sign_agreements(const jmatrix::TridiagonalBands& bands, double eps,
                          int N) {
  double dm2 = 1.0, dm1 = bands.d(0, eps);
  int agreements = ((dm1 > 0.0) == (dm2 > 0.0)) ? 1 : 0;
  for (int k = 1; k <= N; ++k) {
    double ck = bands.c(k - 1, eps);
    double dk = bands.d(k, eps) * dm1 - ck * ck * dm2;
    if (dk == 0.0) dk = -1e-300 * dm1;  // nudge off the exact zero
    if ((dk > 0.0) == (dm1 > 0.0)) ++agreements;
    dm2 = dm1;
    dm1 = dk;
    double mag = std::max(std::abs(dm1), std::abs(dm2));
    if (mag > 1e120) {
      dm1 /= mag;
      dm2 /= mag;
    }
  }
  return agreements;
}

std::vector<DetValue> scan_determinants(const jmatrix::TridiagonalBands& bands,
                                        const std::vector<double>& eps_grid, int N,
                                        bool parallel) {
  std::vector<DetValue> out(eps_grid.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(eps_grid.size()); ++i)
      out[i] = determinant(bands, eps_grid[i], N);
  } else {
    for (std::size_t i = 0; i < eps_grid.size(); ++i)
      out[i] = determinant(bands, eps_grid[i], N);
  }
  return out;
}

namespace {

double bisect_det_root(const jmatrix::TridiagonalBands& bands, int N, double a,
                       double b, int sa, double tol) {
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    double m = 0.5 * (a + b);
    int sm = determinant(bands, m, N).sign;
    if (sm == 0) return m;
    if (sm == sa)
      a = m;
    else
      b = m;
  }
  return 0.5 * (a + b);
}

std::vector<double> roots_at_order(const jmatrix::TridiagonalBands& bands,
                                   double lo, double hi, int N,
                                   const ScanOptions& opts) {
  std::vector<double> grid(opts.scan_points + 1);
  for (int i = 0; i <= opts.scan_points; ++i)
    grid[i] = lo + (hi - lo) * i / opts.scan_points;
  auto dets = scan_determinants(bands, grid, N, opts.parallel);
  std::vector<double> roots;
  for (int i = 0; i < opts.scan_points; ++i) {
    if (dets[i].sign == 0) {
      roots.push_back(grid[i]);
      continue;
    }
    if (dets[i].sign * dets[i + 1].sign < 0) {
      // Refine well below the N-convergence tolerance so root movement
      // between truncation orders is not masked by bracket width.
      roots.push_back(bisect_det_root(bands, N, grid[i], grid[i + 1],
                                      dets[i].sign, 0.125 * opts.tol));
    }
  }
  return roots;
}

}  // namespace

Spectrum eigenvalue_scan(const jmatrix::TridiagonalBands& bands, double eps_lo,
                         double eps_hi, Branch branch, ScanOptions opts) {
  if (eps_lo >= eps_hi)
    throw Error(ErrorKind::InvalidParameter, "eigenvalue_scan: empty range");
  if (bands.has_prefactor_pole && eps_lo <= -bands.m && -bands.m <= eps_hi)
    throw Error(ErrorKind::InvalidParameter,
                "eigenvalue_scan: range contains the prefactor singularity eps = -m");

  auto by_abs = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });
  };

  // Levels deep inside the window need progressively larger truncations, so
  // convergence is judged on the first max_roots levels only; anything still
  // drifting beyond them is dropped.
  std::vector<double> prev = roots_at_order(bands, eps_lo, eps_hi, opts.N_start, opts);
  by_abs(prev);
  std::vector<double> deltas;
  int N = opts.N_start;
  bool converged = false;
  while (!converged) {
    int N2 = 2 * N;
    if (N2 > opts.N_max) {
      if (!converged)
        throw Error(ErrorKind::ConvergenceFailure,
                    "first " + std::to_string(opts.max_roots) +
                        " roots still moving at N_max = " +
                        std::to_string(opts.N_max));
      break;
    }
    std::vector<double> next = roots_at_order(bands, eps_lo, eps_hi, N2, opts);
    by_abs(next);
    std::size_t compare = std::min({prev.size(), next.size(),
                                    static_cast<std::size_t>(opts.max_roots)});
    std::size_t want = std::min(static_cast<std::size_t>(opts.max_roots),
                                std::max(prev.size(), next.size()));
    converged = (compare == want) || next.empty();
    deltas.assign(next.size(), 0.0);
    for (std::size_t i = 0; i < compare; ++i) {
      deltas[i] = std::abs(next[i] - prev[i]);
      if (deltas[i] > opts.tol) converged = false;
    }
    prev = std::move(next);
    N = N2;
  }

  Spectrum spec;
  std::size_t keep = std::min(prev.size(), static_cast<std::size_t>(opts.max_roots));
  for (std::size_t i = 0; i < keep; ++i) {
    SpectrumEntry e;
    e.n = static_cast<int>(i);
    e.eps = prev[i];
    e.branch = branch;
    e.N_used = N;
    e.delta_converge = i < deltas.size() ? deltas[i] : 0.0;
    e.valid = i < deltas.size() ? deltas[i] <= opts.tol : true;
    spec.entries.push_back(e);
  }
  return spec;
}

double implicit_solve(const std::function<double(double)>& residual, double lo,
                      double hi, double tol,
                      const std::function<std::string(double)>& validity) {
  double fa = residual(lo), fb = residual(hi);
  if (fa == 0.0) return lo;
  if (fb == 0.0) return hi;
  if (fa * fb > 0.0)
    throw Error(ErrorKind::NoRoot, "no sign change in bracket [" +
                                       std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
  double a = lo, b = hi;
  while (b - a > tol) {
    double m = 0.5 * (a + b);
    double fm = residual(m);
    if (fm == 0.0) {
      a = b = m;
      break;
    }
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  double root = 0.5 * (a + b);
  // Secant polish inside the final bracket.
  if (fb != fa) {
    double s = b - fb * (b - a) / (fb - fa);
    if (s > a && s < b) root = s;
  }
  if (validity) {
    std::string violation = validity(root);
    if (!violation.empty())
      throw Error(ErrorKind::InvalidBoundState, violation);
  }
  return root;
}

namespace {

// Eigenvalue count below `bound` for the FD operator -1/2 psi'' + u(x) on a
// Dirichlet grid: Sturm count on the symmetric tridiagonal stencil.
int fd_sturm_count(const std::function<double(double, double)>& u, double eps,
                   potentials::Interval dom, int n, double bound) {
  const double h = (dom.hi - dom.lo) / (n + 1);
  const double diag_kin = 1.0 / (h * h);
  const double off = -0.5 / (h * h);
  const double off2 = off * off;
  const double tiny = 1e-300;
  int count = 0;
  double q = 1.0;
  for (int i = 1; i <= n; ++i) {
    double x = dom.lo + i * h;
    double d = diag_kin + u(x, eps);
    q = d - bound - (i == 1 ? 0.0 : off2 / q);
    if (q == 0.0) q = tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> oracle_roots_on_grid(
    const std::function<double(double, double)>& u,
    const std::function<double(double)>& e_of_eps, potentials::Interval dom,
    double eps_lo, double eps_hi, int n_points, const OracleOptions& opts) {
  auto count_at = [&](double eps) {
    return fd_sturm_count(u, eps, dom, n_points, e_of_eps(eps));
  };
  std::vector<double> grid(opts.scan_points + 1);
  for (int i = 0; i <= opts.scan_points; ++i)
    grid[i] = eps_lo + (eps_hi - eps_lo) * i / opts.scan_points;
  std::vector<int> counts(grid.size());
  if (opts.parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(grid.size()); ++i)
      counts[i] = count_at(grid[i]);
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) counts[i] = count_at(grid[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i < opts.scan_points; ++i) {
    int jump = counts[i + 1] - counts[i];
    if (jump == 0) continue;
    // Bisect each unit jump within the cell.
    double a = grid[i], b = grid[i + 1];
    int ca = counts[i];
    for (int level = ca; level != counts[i + 1];
         level += (jump > 0 ? 1 : -1)) {
      double target = (jump > 0) ? level + 1 : level;
      double aa = a, bb = b;
      for (int it = 0; it < 80 && bb - aa > opts.tol; ++it) {
        double mm = 0.5 * (aa + bb);
        if ((count_at(mm) >= target) == (jump > 0))
          bb = mm;
        else
          aa = mm;
      }
      roots.push_back(0.5 * (aa + bb));
      if (static_cast<int>(roots.size()) >= opts.max_states) return roots;
    }
  }
  return roots;
}

}  // namespace

std::vector<double> fd_schrodinger_oracle(
    const std::function<double(double, double)>& u,
    const std::function<double(double)>& e_of_eps, potentials::Interval x_domain,
    double eps_lo, double eps_hi, OracleOptions opts) {
  auto coarse = oracle_roots_on_grid(u, e_of_eps, x_domain, eps_lo, eps_hi,
                                     opts.n_points, opts);
  auto fine = oracle_roots_on_grid(u, e_of_eps, x_domain, eps_lo, eps_hi,
                                   2 * opts.n_points, opts);
  if (coarse.size() != fine.size()) {
    // A state appearing only at one resolution: fall back to the fine grid
    // but flag gross shifts below.
    coarse.resize(fine.size(), fine.empty() ? 0.0 : fine.back());
  }
  std::vector<double> out(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) {
    double shift = std::abs(fine[i] - coarse[i]);
    if (shift > 1e-2)
      throw Error(ErrorKind::ResolutionError,
                  "eigenvalue moved by " + std::to_string(shift) +
                      " between grid resolutions");
    out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;  // h^2 Richardson
  }
  return out;
}

std::vector<double> fd_eigenvalues(const std::function<double(double)>& u,
                                   potentials::Interval x_domain, int n_points,
                                   int k) {
  const double h = (x_domain.hi - x_domain.lo) / (n_points + 1);
  std::vector<double> d(n_points), e(n_points - 1, -0.5 / (h * h));
  for (int i = 0; i < n_points; ++i) {
    double x = x_domain.lo + (i + 1) * h;
    d[i] = 1.0 / (h * h) + u(x);
  }
  return quad::tridiag_lowest_eigenvalues(d, e, k, 1e-12);
}

int fd_count_below(const std::function<double(double)>& u,
                   potentials::Interval x_domain, int n_points, double threshold) {
  const double h = (x_domain.hi - x_domain.lo) / (n_points + 1);
  std::vector<double> d(n_points), e(n_points - 1, -0.5 / (h * h));
  for (int i = 0; i < n_points; ++i) {
    double x = x_domain.lo + (i + 1) * h;
    d[i] = 1.0 / (h * h) + u(x);
  }
  return quad::sturm_count(d, e, threshold);
}

}  // namespace tra::solver
