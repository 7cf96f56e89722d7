#pragma once

#include "gwlink/quantity.hpp"
#include "gwlink/version.hpp"

namespace gwlink {

// ============================================================================
// Pinned fundamental constants, CODATA 2018, coherent SI base units. Pinned
// rather than fetched: the suite's frozen expected values depend on these
// exact literals. Published roundings are used as listed (hbar and k_e are
// not recomputed from h or epsilon_0).
//
// All formulas downstream are the SI forms; the corresponding Gaussian forms
// are recovered by dropping k_e (Coulomb force k_e q^2/r^2 <-> q^2/r^2, fine
// structure k_e e^2/(hbar c) <-> e^2/(hbar c), Larmor (2/3)k_e q^2 a^2/c^3 <->
// (2/3)q^2 a^2/c^3).
// ============================================================================

struct ConstantsTable {
  Quantity G;     ///< gravitational constant, m^3 kg^-1 s^-2
  Quantity c;     ///< speed of light, m/s (exact)
  Quantity hbar;  ///< reduced Planck constant, J s
  Quantity e;     ///< elementary charge, C (exact)
  Quantity k_B;   ///< Boltzmann constant, J/K (exact)
  Quantity k_e;   ///< Coulomb constant 1/(4 pi eps0), N m^2 C^-2
  Quantity m_e;   ///< electron mass, kg
  Quantity m_He4; ///< helium-4 atomic mass, kg (4.002603254 u)
  Quantity N_A;   ///< Avogadro constant, mol^-1 (exact)

  const char* release = constants_release;

  /// Fine-structure constant k_e e^2/(hbar c); equals 1/137.036 to a part in
  /// 1e6 with this release.
  [[nodiscard]] double alpha() const {
    return as_scalar(k_e * e * e / (hbar * c), "alpha");
  }
};

/// CODATA 2018 atomic mass constant, kg.
inline constexpr double atomic_mass_unit_kg = 1.66053906660e-27;

/// Helium-4 relative atomic mass, in u.
inline constexpr double helium4_relative_mass = 4.002603254;

/// The pinned table. Idempotent; every other module reads constants only here.
[[nodiscard]] inline const ConstantsTable& constants() {
  static const ConstantsTable table{
      Quantity(6.67430e-11, dims::gravitational_constant),
      Quantity(299792458.0, dims::velocity),
      Quantity(1.054571817e-34, dims::energy + dims::time),
      Quantity(1.602176634e-19, dims::charge),
      Quantity(1.380649e-23, dims::entropy),
      Quantity(8.9875517923e9, dims::coulomb_constant),
      Quantity(9.1093837015e-31, dims::mass),
      Quantity(helium4_relative_mass * atomic_mass_unit_kg, dims::mass),
      Quantity(6.02214076e23, Dimension{0, 0, 0, 0, 0, -1}),
  };
  return table;
}

/// Molar mass of helium-4, kg/mol; the default drop material.
[[nodiscard]] inline Quantity helium4_molar_mass() {
  return constants().m_He4 * constants().N_A;
}

// Reported binding energies for electrons on helium, kept as documentation
// only: no formula in this library consumes them.
inline constexpr double electron_surface_binding_K = 8.0;  ///< surface state
inline constexpr double electron_vortex_binding_K = 40.0;  ///< vortex-trapped state

} // namespace gwlink
