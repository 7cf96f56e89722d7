#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <gwlink/constants.hpp>
#include <gwlink/radiation.hpp>

using namespace gwlink;

namespace {
RadiatingBody electron_body(double accel = 1.0, double kappa = 1.0) {
  const auto& k = constants();
  return RadiatingBody{k.e, k.m_e, Quantity(accel, dims::acceleration), kappa};
}
} // namespace

TEST_CASE("dipole power for one electron at unit acceleration") {
  const auto& k = constants();
  const Quantity p = larmor_em_power(k.e, Quantity(1.0, dims::acceleration));
  CHECK(p.dim() == dims::power);
  // (2/3) k_e e^2 a^2 / c^3, frozen from extended-precision evaluation.
  CHECK(p.magnitude() == Catch::Approx(5.7083267650541706e-54).epsilon(1e-14));
}

TEST_CASE("dipole power scales with the square of charge and acceleration") {
  const auto& k = constants();
  const Quantity a1(3.0, dims::acceleration);
  const Quantity p1 = larmor_em_power(k.e, a1);
  const Quantity p2 = larmor_em_power(2.0 * k.e, a1);
  CHECK(p2.magnitude() == Catch::Approx(4.0 * p1.magnitude()).epsilon(1e-14));
  const Quantity p4 = larmor_em_power(k.e, 2.0 * a1);
  CHECK(p4.magnitude() == Catch::Approx(4.0 * p1.magnitude()).epsilon(1e-14));
}

TEST_CASE("quadrupolar powers carry the geometry factor linearly") {
  RadiatingBody b = electron_body(2.5, 1.0);
  const double em1 = quadrupolar_em_power(b).magnitude();
  const double gr1 = quadrupolar_gr_power(b).magnitude();
  b.kappa = 3.0;
  CHECK(quadrupolar_em_power(b).magnitude() == Catch::Approx(3.0 * em1).epsilon(1e-14));
  CHECK(quadrupolar_gr_power(b).magnitude() == Catch::Approx(3.0 * gr1).epsilon(1e-14));
}

TEST_CASE("power ratio for the electron") {
  const auto& k = constants();
  // G m_e^2 / (k_e e^2): the frozen oracle for the famous 2.4e-43.
  CHECK(power_ratio(k.e, k.m_e) == Catch::Approx(2.4006095051362923e-43).epsilon(1e-14));
}

TEST_CASE("power ratio is charge-and-mass only: quotient of powers matches") {
  std::mt19937 rng(424242u);
  std::uniform_real_distribution<double> log_a(-3.0, 6.0);
  std::uniform_real_distribution<double> kappa_dist(0.1, 10.0);
  const auto& k = constants();
  for (int i = 0; i < 100; ++i) {
    RadiatingBody b = electron_body(std::pow(10.0, log_a(rng)), kappa_dist(rng));
    const double quotient =
        quadrupolar_gr_power(b).magnitude() / quadrupolar_em_power(b).magnitude();
    const double ratio = power_ratio(b.charge, b.mass);
    CHECK(quotient == Catch::Approx(ratio).epsilon(1e-12));
  }
  (void)k;
}

TEST_CASE("power ratio rejects zero charge") {
  const auto& k = constants();
  CHECK_THROWS_AS(power_ratio(Quantity(0.0, dims::charge), k.m_e), domain_error);
}

TEST_CASE("power ratio rejects wrong dimensions") {
  const auto& k = constants();
  CHECK_THROWS_AS(power_ratio(k.m_e, k.m_e), dimension_error);
  CHECK_THROWS_AS(power_ratio(k.e, k.e), dimension_error);
}

TEST_CASE("gravitational channel negligibility") {
  const auto& k = constants();
  CHECK(gr_negligible(k.e, k.m_e, 1.0));  // 2.4e-43 is far below any threshold
  // At the mass where the ratio is exactly 1, nothing is negligible.
  const Quantity heavy = sqrt(k.k_e / k.G) * k.e;
  CHECK(heavy.dim() == dims::mass);
  CHECK_FALSE(gr_negligible(k.e, heavy, 1.0));
  // kappa scales the effective ratio before the threshold comparison.
  CHECK_THROWS_AS(gr_negligible(k.e, k.m_e, 0.0), domain_error);
}

TEST_CASE("power breakdown is self-consistent") {
  const RadiatingBody b = electron_body(7.0, 2.0);
  const PowerBreakdown pb = power_breakdown(b);
  CHECK(pb.p_em.dim() == dims::power);
  CHECK(pb.p_gr.dim() == dims::power);
  CHECK(pb.p_em == quadrupolar_em_power(b));
  CHECK(pb.p_gr == quadrupolar_gr_power(b));
  CHECK(pb.ratio == Catch::Approx(power_ratio(b.charge, b.mass)).epsilon(1e-12));
}

TEST_CASE("radiating body validation") {
  RadiatingBody b = electron_body();
  b.mass = Quantity(-1.0, dims::mass);
  CHECK_THROWS_AS(quadrupolar_gr_power(b), domain_error);
  b = electron_body();
  b.kappa = 0.0;
  CHECK_THROWS_AS(quadrupolar_em_power(b), domain_error);
  b = electron_body();
  b.acceleration = Quantity(1.0, dims::velocity);  // wrong dimension
  CHECK_THROWS_AS(quadrupolar_em_power(b), dimension_error);
}
