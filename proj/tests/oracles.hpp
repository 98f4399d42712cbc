#pragma once

#include <functional>

// Independent reference implementations used only by tests. These never call
// the library evaluation paths they check. Series are summed in extended
// precision because the explicit forms cancel badly at higher degree.
namespace oracles {

// Explicit finite series for L_n^nu(y). `condition` (optional) receives the
// cancellation ratio sum|t_k| / |sum t_k|; the series value is trustworthy to
// roughly condition * 1e-18.
double laguerre_series(int n, double nu, double y, double* condition = nullptr);

// Explicit finite series for P_n^(mu,nu)(y).
double jacobi_series(int n, double mu, double nu, double y,
                     double* condition = nullptr);

// Central 5-point first derivative.
double fd_deriv(const std::function<double(double)>& f, double x, double h);

// Central second derivative (5-point, 4th order).
double fd_second(const std::function<double(double)>& f, double x, double h);

// Residual of the Laguerre differential equation at y, with finite-difference
// derivatives, relative to the local scale.
double laguerre_ode_residual(int n, double nu, double y);

// Residual of the Jacobi differential equation at y.
double jacobi_ode_residual(int n, double mu, double nu, double y);

// Residual of the Meixner-Pollaczek three-term relation at order n.
double mp_recurrence_residual(int n, double mu, double z, double theta,
                              bool hyperbolic);

}  // namespace oracles
