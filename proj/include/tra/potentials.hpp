#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tra::potentials {

// Registered scalar-function families. Keeping these as tagged records (not
// opaque callables) lets the wave-operator layer do exact coefficient
// matching per family.
enum class PotKind {
  Zero,
  Constant,      // c0
  Linear,        // c0 x
  Quadratic,     // c0 x^2
  Exponential,   // c0 e^{-lambda x}
  Tanh,          // c0 tanh(lambda x)
  SechSquared,   // c0 / cosh^2(lambda x)
  Hulthen,       // c0 / (e^{lambda x} - 1)
  Cosine,        // c0 cos(lambda x)
  InversePower,  // c0 / x + c1 / x^2
  Tan,           // c0 tan(lambda x)
  ExpPair,       // c0 e^{-lambda x} + c1 e^{-2 lambda x} + shift
  HulthenPair,   // c0 h + c1 h^2 + shift,  h = 1/(e^{lambda x} - 1)
};

struct Potential {
  PotKind kind = PotKind::Zero;
  double c0 = 0.0;
  double lambda = 1.0;
  double c1 = 0.0;     // second coefficient (InversePower/ExpPair/HulthenPair)
  double shift = 0.0;  // additive constant (ExpPair/HulthenPair)

  static Potential zero() { return {}; }
  static Potential constant(double c);
  static Potential linear(double c);
  static Potential quadratic(double c);
  static Potential exponential(double c, double lambda);
  static Potential tanh(double c, double lambda);
  static Potential sech_squared(double c, double lambda);
  static Potential hulthen(double c, double lambda);
  static Potential cosine(double c, double lambda);
  static Potential inverse_power(double c_over_x, double c_over_x2);
  static Potential tan(double c, double lambda);
  static Potential exp_pair(double c_exp, double c_exp2, double lambda,
                            double shift = 0.0);
  static Potential hulthen_pair(double c_h, double c_h2, double lambda,
                                double shift = 0.0);

  double eval(double x) const;   // DomainError at a singular point
  double deriv(double x) const;
  bool is_zero() const;
  std::vector<double> singular_points() const;
  std::string describe() const;
};

struct Interval {
  double lo;
  double hi;
};

// The (S, V, W) triple plus mass. U is dropped at ingestion: a phase
// transformation with dLambda/dx = U removes it from the wave equation.
struct PotentialConfig {
  double m = 0.0;
  Potential S, V, W;
  std::optional<Potential> U;
  Interval x_domain{-40.0, 40.0};

  PotentialConfig ingest() const;  // removes U
};

enum class SymmetryClass {
  SpinSymmetric,       // V - S = 0
  PseudospinSymmetric, // V + S = 0
  ScalarOnly,          // V = W = 0
  PseudoscalarOnly,    // S = V = 0, W != 0
  General,
};

const char* to_string(SymmetryClass c);

SymmetryClass classify(const PotentialConfig& config);

enum class Component { Upper, Lower };
enum class SignBranch { Plus, Minus };

// Effective one-component Schrodinger reduction: -1/2 psi'' + U psi = E psi.
// U may depend on the energy (spin classes), so it is kept as a rule over
// (x, eps) and E as a rule over eps.
struct EffectiveSchrodinger {
  std::function<double(double x, double eps)> u;
  std::function<double(double eps)> e_of_eps;
  Component component = Component::Upper;
  SignBranch sign = SignBranch::Plus;
  bool eps_dependent = false;
  Interval x_domain{-40.0, 40.0};
};

EffectiveSchrodinger reduce(const PotentialConfig& config, SymmetryClass cls,
                            SignBranch sign = SignBranch::Plus);

}  // namespace tra::potentials
