#pragma once

#include <functional>
#include <vector>

namespace tra::quad {

// Nodes/weights of an n-point Gauss rule for some positive weight function.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }

  template <typename F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

// Sturm-count of eigenvalues of the symmetric tridiagonal matrix
// (diag d, offdiag e) strictly below x.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x);

// The k lowest eigenvalues (ascending) by Sturm-sequence bisection.
std::vector<double> tridiag_lowest_eigenvalues(const std::vector<double>& d,
                                               const std::vector<double>& e,
                                               std::size_t k, double tol = 1e-13);

// Gauss rule from the monic three-term recurrence
//   pi_{k+1}(x) = (x - a_k) pi_k(x) - beta_k pi_{k-1}(x),  beta_0 = mu0.
// Nodes are the eigenvalues of the Jacobi matrix (Sturm bisection); weights
// are the Christoffel numbers 1/sum_k ptilde_k(x_i)^2 evaluated with the
// orthonormal recurrence, so no eigenvectors are required.
GaussRule gauss_from_recurrence(const std::vector<double>& a,
                                const std::vector<double>& beta, double mu0);

// Weight y^nu e^{-y} on [0, inf).
GaussRule laguerre_rule(std::size_t n, double nu);
// Weight (1-y)^mu (1+y)^nu on [-1, 1].
GaussRule jacobi_rule(std::size_t n, double mu, double nu);
GaussRule legendre_rule(std::size_t n);

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
// Satisfies |err| <= max(abs_tol, rel_tol*|I|) or throws IntegrationError.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-13, double rel_tol = 1e-10);

// Half line [a, inf) via x = a + t/(1-t).
double integrate_half_line(const std::function<double(double)>& f, double a,
                           double abs_tol = 1e-13, double rel_tol = 1e-10);

// Whole real line via x = t/(1-t^2).
double integrate_real_line(const std::function<double(double)>& f,
                           double abs_tol = 1e-13, double rel_tol = 1e-10);

}  // namespace tra::quad
