#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tra/jmatrix.hpp"
#include "tra/potentials.hpp"

namespace tra::solver {

struct RecursionSeed {
  double f_minus1 = 0.0;
  double f_0 = 1.0;
};

// Expansion coefficients from the three-term recursion, periodically rescaled
// to avoid overflow. The true coefficient is f[n] * exp(log_scale[n]), so
// ratios are exact in the stored representation.
struct RecursionResult {
  std::vector<double> f;
  std::vector<double> log_scale;
  double value(int n) const { return f[n] * std::exp(log_scale[n]); }
};

RecursionResult recursion_run(const jmatrix::TridiagonalBands& bands, double eps,
                              int N, RecursionSeed seed = {});

enum class Branch { Positive, Negative };

struct SpectrumEntry {
  int n = 0;
  double eps = 0.0;
  Branch branch = Branch::Positive;
  int N_used = 0;
  double delta_converge = 0.0;
  bool valid = true;
  std::string note;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;
  bool empty() const { return entries.empty(); }
};

// Sign and log-magnitude of the leading principal minor D_N(eps) of the
// truncated tridiagonal wave operator.
struct DetValue {
  int sign = 0;
  double log_abs = 0.0;
};

DetValue determinant(const jmatrix::TridiagonalBands& bands, double eps, int N);

// Number of sign agreements between consecutive members of the minor
// sequence {D_k(eps)}; a Sturm-style count used to cross-check scans.
int minor_sign_agreements(const jmatrix::TridiagonalBands& bands, double eps, int N);

struct ScanOptions {
  int N_start = 24;
  int N_max = 256;
  double tol = 1e-8;
  int scan_points = 2000;
  int max_roots = 16;  // levels the caller wants converged
  bool parallel = true;  // serial path kept as the reference for testing
};

// Determinant signs over a uniform eps grid; the OpenMP kernel and the serial
// reference must produce identical output.
std::vector<DetValue> scan_determinants(const jmatrix::TridiagonalBands& bands,
                                        const std::vector<double>& eps_grid, int N,
                                        bool parallel);

// Bound states from sign changes of D_N(eps), bisection-refined, with N
// doubled until each root is stable to tol.
Spectrum eigenvalue_scan(const jmatrix::TridiagonalBands& bands, double eps_lo,
                         double eps_hi, Branch branch, ScanOptions opts = {});

// Root of lhs(eps) - rhs(eps) = 0 by bisection with a secant polish.
// The optional validity predicate returns a violation message, mapped to
// InvalidBoundState.
double implicit_solve(const std::function<double(double)>& residual, double lo,
                      double hi, double tol,
                      const std::function<std::string(double)>& validity = {});

struct OracleOptions {
  int n_points = 4000;
  int scan_points = 600;
  double tol = 1e-9;
  int max_states = 32;
  bool parallel = true;
};

// Independent verification oracle: discretizes -1/2 psi'' + U(x;eps) psi =
// E(eps) psi with central differences and Dirichlet walls, locates the eps
// where the operator acquires a new eigenvalue below E(eps) (Sturm counting),
// and Richardson-extrapolates over two grids.
std::vector<double> fd_schrodinger_oracle(
    const std::function<double(double, double)>& u,
    const std::function<double(double)>& e_of_eps, potentials::Interval x_domain,
    double eps_lo, double eps_hi, OracleOptions opts = {});

// Eigenvalues (not eps roots) of the eps-frozen operator; used for
// eps-independent reductions and for bound-state counting.
std::vector<double> fd_eigenvalues(const std::function<double(double)>& u,
                                   potentials::Interval x_domain, int n_points,
                                   int k);
int fd_count_below(const std::function<double(double)>& u,
                   potentials::Interval x_domain, int n_points, double threshold);

}  // namespace tra::solver
