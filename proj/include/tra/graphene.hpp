#pragma once

#include <string>

#include "tra/potentials.hpp"
#include "tra/solver.hpp"

namespace tra::graphene {

enum class FieldFamily {
  Constant,       // B0
  InverseSquare,  // B0 / x^2
  CoshBarrier,    // B0 / cosh^2(alpha x)
  ExpDecay,       // B0 e^{-alpha x}
  Hulthen,        // B0 e^{alpha x} / (e^{alpha x} - 1)^2
  SecSquared,     // B0 / cos^2(alpha x)
  SinhSquared,    // B0 / sinh^2(alpha x)
};

// Unit scales; everything internal runs dimensionless (all scales 1) and the
// scales convert at output only.
struct Scales {
  double hbar = 1.0;
  double v_f = 1.0;
  double e_over_chbar = 1.0;
};

struct FieldProfile {
  FieldFamily family = FieldFamily::CoshBarrier;
  double B0 = 1.0;
  double alpha = 1.0;  // rate (unused for Constant/InverseSquare)
  double k = 1.0;      // transverse wavenumber
  Scales scales;
};

// Magnetic field -> vector potential -> scalar-only Dirac configuration,
// with the mass slot holding the transverse wavenumber.
potentials::PotentialConfig field_to_scalar(const FieldProfile& profile);

// Landau-level energy from the mapped catalog entry, rescaled by hbar*v_F.
double landau_spectrum(const FieldProfile& profile, int n, solver::Branch branch);

// Catalog entry backing a field family.
std::string mapped_entry_id(FieldFamily family);

// B(x) for finite-difference checks of the antiderivative map.
double field_value(const FieldProfile& profile, double x);

}  // namespace tra::graphene
