#pragma once

#include <complex>

namespace tra::orthopoly {

enum class PolyKind { Laguerre, Jacobi, MeixnerPollaczek };

// Parameter record for one of the three families. For Laguerre only nu is
// used; Jacobi uses (mu, nu); Meixner-Pollaczek uses (mu, theta, hyperbolic).
struct PolyFamily {
  PolyKind kind = PolyKind::Laguerre;
  double nu = 0.0;
  double mu = 0.0;
  double theta = 0.0;
  bool hyperbolic = false;

  void validate() const;  // throws InvalidParameter on a bad record
};

// Generalized Laguerre L_n^nu(y), forward recurrence in n. Requires nu > -1.
double laguerre_eval(int n, double nu, double y);
// d/dy L_n^nu(y) = -L_{n-1}^{nu+1}(y).
double laguerre_deriv(int n, double nu, double y);

// Jacobi P_n^(mu,nu)(y) on [-1,1], forward recurrence in n.
double jacobi_eval(int n, double mu, double nu, double y);
// d/dy P_n^(mu,nu)(y) = (n+mu+nu+1)/2 * P_{n-1}^(mu+1,nu+1)(y).
double jacobi_deriv(int n, double mu, double nu, double y);

// Orthonormal Meixner-Pollaczek P_n^mu(z; theta). The hyperbolic flag swaps
// sin/cos for sinh/cosh in the recurrence, which stays real-coefficient.
double mp_eval(int n, double mu, double z, double theta, bool hyperbolic = false);

// Meixner-Pollaczek weight function, evaluated in log space.
double mp_weight(double z, double mu, double theta);

// Principal branch log Gamma for Re(z) > 0 (Lanczos).
std::complex<double> log_gamma(std::complex<double> z);

// Normalization constants of the basis expansions, computed from log-gamma
// differences so large n does not overflow.
double laguerre_norm(int n, double nu);            // sqrt(n!/Gamma(n+nu+1))
double jacobi_norm(int n, double mu, double nu);   // sqrt((2n+mu+nu+1)n!Gamma(n+mu+nu+1)/(2^(mu+nu+1)Gamma(n+nu+1)Gamma(n+mu+1)))

}  // namespace tra::orthopoly
