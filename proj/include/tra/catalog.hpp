#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tra/potentials.hpp"
#include "tra/solver.hpp"
#include "tra/spinor.hpp"

namespace tra::catalog {

// Free parameters of an entry, by name.
class Params {
public:
  Params() = default;
  Params(std::initializer_list<std::pair<const std::string, double>> init)
      : values_(init) {}
  double at(const std::string& name) const;
  double get(const std::string& name, double fallback) const;
  void set(const std::string& name, double v) { values_[name] = v; }
  bool has(const std::string& name) const { return values_.count(name) > 0; }
  const std::map<std::string, double>& map() const { return values_; }

private:
  std::map<std::string, double> values_;
};

// One closed-form solvable configuration: its Dirac configuration, spectrum
// rule, validity bounds, wavefunction constructor and the effective
// one-component reduction used by the finite-difference cross-check.
struct Entry {
  std::string id;
  std::string title;
  std::string note;  // subtleties worth knowing (validate reports the details)
  potentials::SymmetryClass cls = potentials::SymmetryClass::General;
  std::vector<std::string> param_names;
  Params defaults;  // registered parameter set used by self-tests

  std::function<potentials::PotentialConfig(const Params&)> config;
  // The Dirac configuration the closed-form solution satisfies exactly;
  // differs from `config` only where the kinetic-balance reduction is an
  // approximation (the general-case oscillator).
  std::function<potentials::PotentialConfig(const Params&)> residual_config;

  std::function<double(const Params&, int n, solver::Branch)> spectrum;
  // Number of bound states on the positive branch; -1 when infinite.
  std::function<int(const Params&)> bound_count;
  // False when the per-degree enumeration does not exhaust the window (the
  // eps-dependent level conditions can hold at several energies per degree).
  bool count_exhaustive = true;

  bool has_wavefunction = true;
  bool wavefunction_is_lower = false;
  std::function<spinor::ComponentRule(const Params&, int n, double eps)> wavefunction;

  // Effective Schrodinger reduction for the oracle (may be eps-dependent).
  std::function<potentials::EffectiveSchrodinger(const Params&)> reduced;
  // eps window containing the discrete spectrum of the given branch.
  std::function<std::pair<double, double>(const Params&, solver::Branch)> eps_window;
  std::function<potentials::Interval(const Params&)> oracle_domain;
  // Span for wavefunction grids (envelope support).
  std::function<potentials::Interval(const Params&, int n, double eps)> wf_domain;
  // Position of formula level n in the oracle's root list (identity unless
  // the entry covers one parity sector of a two-sector reduction, or has a
  // zero mode the eps scan cannot see).
  std::function<int(const Params&, int)> oracle_index;
};

const std::vector<Entry>& entries();
const Entry& find(const std::string& id);  // throws UnknownEntry

double spectrum(const Entry& entry, const Params& params, int n,
                solver::Branch branch);
double wavefunction_upper(const Entry& entry, const Params& params, int n,
                          double x, solver::Branch branch = solver::Branch::Positive);

// Resolves eps_n first, then evaluates the component rule at that energy.
struct ResolvedState {
  double eps = 0.0;
  spinor::ComponentRule rule;
  potentials::Interval domain{0.0, 0.0};
  bool is_lower = false;
};
ResolvedState resolve_state(const Entry& entry, const Params& params, int n,
                            solver::Branch branch);

// One-component (Schrodinger-level) solvable rows, exposed for the
// symmetry-reduction pathway.
struct SchrodingerRow {
  std::string id;
  std::string title;
  std::string note;
  std::vector<std::string> param_names;
  Params defaults;
  std::function<double(const Params&, int)> energy;  // E_n
  std::function<int(const Params&)> bound_count;     // -1 = infinite
  bool has_wavefunction = true;
  std::function<double(const Params&, int, double)> wavefunction;
  std::function<double(const Params&, double)> potential;  // V(x)
  std::function<potentials::Interval(const Params&)> domain;
};
const std::vector<SchrodingerRow>& schrodinger_rows();
const SchrodingerRow& find_row(const std::string& id);

// Tridiagonal rule in the numerical convention of the published sinusoidal
// reference table. It differs from the wave-operator bands (see validate's
// report); the table2 command reproduces the published values with it.
jmatrix::TridiagonalBands table2_bands(double m, double V0, double kappa);

// Wave-operator bands of the sinusoidal configuration (the physical route).
jmatrix::TridiagonalBands sinusoidal_bands(double m, double V0, double kappa,
                                           double mu = 0.5, double nu = 0.5);

// Expansion coefficients f_0..f_N of a bands rule at energy eps (seeded
// f_{-1} = 0, f_0 = 1), used by the series wavefunctions.
std::vector<double> series_coefficients(const jmatrix::TridiagonalBands& bands,
                                        double eps, int N);

}  // namespace tra::catalog
