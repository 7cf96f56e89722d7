#include <catch2/catch_amalgamated.hpp>

#include <gwlink/constants.hpp>

using namespace gwlink;

// The table pins published roundings; the tests compare exactly, not
// approximately, because any drift in these literals silently shifts every
// downstream number.
TEST_CASE("pinned constant magnitudes") {
  const auto& k = constants();
  CHECK(k.G.magnitude() == 6.67430e-11);
  CHECK(k.c.magnitude() == 299792458.0);
  CHECK(k.hbar.magnitude() == 1.054571817e-34);
  CHECK(k.e.magnitude() == 1.602176634e-19);
  CHECK(k.k_B.magnitude() == 1.380649e-23);
  CHECK(k.k_e.magnitude() == 8.9875517923e9);
  CHECK(k.m_e.magnitude() == 9.1093837015e-31);
  CHECK(k.N_A.magnitude() == 6.02214076e23);
  CHECK(std::string(k.release) == "CODATA-2018");
}

TEST_CASE("constant dimensions") {
  const auto& k = constants();
  CHECK(k.G.dim() == dims::gravitational_constant);
  CHECK(k.c.dim() == dims::velocity);
  CHECK(k.hbar.dim() == dims::energy + dims::time);
  CHECK(k.e.dim() == dims::charge);
  CHECK(k.k_B.dim() == dims::entropy);
  CHECK(k.k_e.dim() == dims::coulomb_constant);
  CHECK(k.m_e.dim() == dims::mass);
  CHECK(k.m_He4.dim() == dims::mass);
  CHECK(k.N_A.dim() == Dimension{0, 0, 0, 0, 0, -1});
}

TEST_CASE("helium-4 atomic mass from the pinned unit") {
  const auto& k = constants();
  // 4.002603254 u with u = 1.66053906660e-27 kg, evaluated in extended
  // precision and frozen.
  CHECK(k.m_He4.magnitude() == Catch::Approx(6.6464790713672827e-27).epsilon(1e-15));
  CHECK(helium4_relative_mass == 4.002603254);
  CHECK(atomic_mass_unit_kg == 1.66053906660e-27);
}

TEST_CASE("fine-structure constant from the pinned values") {
  const auto& k = constants();
  // k_e e^2 / (hbar c), frozen from a 30-digit evaluation of the pinned
  // roundings (not the CODATA alpha, which they only approximate).
  CHECK(k.alpha() == Catch::Approx(0.0072973525737807876).epsilon(1e-15));
  CHECK(1.0 / k.alpha() == Catch::Approx(137.0359989995517).epsilon(1e-15));
}

TEST_CASE("molar mass of helium-4") {
  const Quantity molar = helium4_molar_mass();
  CHECK(molar.dim() == dims::molar_mass);
  CHECK(molar.magnitude() == Catch::Approx(0.0040026032526167862).epsilon(1e-15));
}

TEST_CASE("documented binding energies stay documented") {
  // Surface vs vortex-core electron binding, in kelvin; used only for
  // explanation in reports, never in formulas. Pin them so a refactor that
  // starts consuming them shows up here.
  CHECK(electron_surface_binding_K == 8.0);
  CHECK(electron_vortex_binding_K == 40.0);
}
