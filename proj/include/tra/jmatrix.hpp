#pragma once

#include <functional>

#include "tra/basis.hpp"
#include "tra/potentials.hpp"

namespace tra::jmatrix {

// Energy-dependent linear coefficients of G(y) = rho(eps) y + sigma(eps),
// split into the eps-independent pseudoscalar part and the (eps+m)-linear
// potential part so bands stay rules over (n, eps).
struct LinearityRule {
  double p0 = 0.0, p1 = 0.0;  // W^2 - W' = p0 + p1 y
  double q0 = 0.0, q1 = 0.0;  // V + S = q0 + q1 y
  double kappa2 = 1.0;        // squared map constant
  double const_term = 0.0;    // envelope constant in G
  double y_term = 0.0;        // envelope y-coefficient in G (Laguerre lane)
  double eta = 1.0, m = 0.0;
  bool jacobi = false;

  double rho(double eps) const;
  double sigma(double eps) const;
};

struct LinearityResult {
  double rho = 0.0;
  double sigma = 0.0;
  double residual_bound = 0.0;  // max |G(y) - (rho y + sigma)| on the probe grid
  LinearityRule rule;
};

// Symmetric tridiagonal wave-operator bands: d(n,eps) = J_{n,n} and
// c(n,eps) = J_{n,n+1} = J_{n+1,n}.
struct TridiagonalBands {
  std::function<double(int, double)> d;
  std::function<double(int, double)> c;
  basis::BasisSpec spec;
  double eta = 1.0;
  double m = 0.0;
  // Wave-operator bands blow up at eps = -m; rescaled conventions may not.
  bool has_prefactor_pole = true;
};

// Verifies that the configuration admits a tridiagonal representation in the
// given basis and extracts (rho, sigma) by exact coefficient matching,
// checked on a 64-point probe grid.
LinearityResult linearity(const potentials::PotentialConfig& config,
                          const basis::BasisSpec& spec, double eps);

TridiagonalBands bands_laguerre(const LinearityResult& lin,
                                const basis::BasisSpec& spec, double m);
TridiagonalBands bands_jacobi(const LinearityResult& lin,
                              const basis::BasisSpec& spec, double m);

// Convenience: linearity check + the band rule matching the basis kind.
TridiagonalBands bands(const potentials::PotentialConfig& config,
                       const basis::BasisSpec& spec);

// Which matrix the quadrature oracle assembles. Reduced is the wave-operator
// form whose analytic bands exist; FullGalerkin keeps the lower-lower channel
// of the 2x2 operator, which is NOT tridiagonal unless V - S is constant.
enum class ElementForm { Reduced, FullGalerkin };

// Brute-force matrix element <phi_n|(H - eps)|phi_m> by adaptive quadrature
// with kinetic-balance lower components.
double element_quadrature(const potentials::PotentialConfig& config,
                          const basis::BasisSpec& spec, double eps, int n, int m,
                          ElementForm form = ElementForm::Reduced);

// Full 2x2 element with an arbitrary lower-component rule (j, x) -> value.
// Used to demonstrate that representations built without the kinetic-balance
// lower components lose tridiagonality.
using LowerRule = std::function<double(int, double)>;
double element_quadrature_general(const potentials::PotentialConfig& config,
                                  const basis::BasisSpec& spec, double eps, int n,
                                  int m, const LowerRule& lower);

}  // namespace tra::jmatrix
