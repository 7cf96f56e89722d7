#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <gwlink/quantity.hpp>

using namespace gwlink;

namespace {

Dimension random_dim(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  return Dimension{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
}

double random_mag(std::mt19937& rng) {
  std::uniform_real_distribution<double> m(-1e6, 1e6);
  double v = m(rng);
  if (v == 0.0) v = 1.0;
  return v;
}

} // namespace

TEST_CASE("dimension equality and composition") {
  CHECK(dims::energy == Dimension{1, 2, -2, 0, 0, 0});
  CHECK(dims::power == dims::energy - dims::time);
  CHECK(dims::force + dims::length == dims::energy);
  CHECK(dims::velocity.pow(2) == Dimension{0, 2, -2, 0, 0, 0});
  CHECK(dims::scalar.dimensionless());
  CHECK_FALSE(dims::mass.dimensionless());
}

TEST_CASE("dimension rendering") {
  CHECK(dims::scalar.str() == "1");
  CHECK(dims::energy.str() == "kg m^2 s^-2");
  CHECK(dims::charge.str() == "s A");
  CHECK(dims::gravitational_constant.str() == "kg^-1 m^3 s^-2");
}

TEST_CASE("addition requires matching dimensions") {
  const Quantity a(2.0, dims::energy);
  const Quantity b(3.0, dims::energy);
  CHECK((a + b).magnitude() == 5.0);
  CHECK((a - b).magnitude() == -1.0);
  CHECK_THROWS_AS(a + Quantity(1.0, dims::mass), dimension_error);
  CHECK_THROWS_AS(a - Quantity(1.0, dims::time), dimension_error);
}

TEST_CASE("multiplication and division combine exponents") {
  const Quantity f(2.0, dims::force);
  const Quantity d(3.0, dims::length);
  const Quantity e = f * d;
  CHECK(e.dim() == dims::energy);
  CHECK(e.magnitude() == 6.0);
  const Quantity v = e / Quantity(2.0, dims::time);
  CHECK(v.dim() == dims::power);
  CHECK(v.magnitude() == 3.0);
}

TEST_CASE("scalar scaling keeps the dimension") {
  const Quantity m(5.0, dims::mass);
  CHECK((2.0 * m).dim() == dims::mass);
  CHECK((m * 2.0).magnitude() == 10.0);
  CHECK((m / 2.0).magnitude() == 2.5);
}

TEST_CASE("division by zero is a numerics error") {
  const Quantity a(1.0, dims::energy);
  CHECK_THROWS_AS(a / Quantity(0.0, dims::time), numerics_error);
  CHECK_THROWS_AS(a / 0.0, numerics_error);
}

TEST_CASE("non-finite magnitudes are rejected everywhere") {
  CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::infinity(), dims::mass),
                  numerics_error);
  CHECK_THROWS_AS(Quantity(std::nan(""), dims::scalar), numerics_error);
  const Quantity big(1e308, dims::mass);
  CHECK_THROWS_AS(big * big, numerics_error);
  CHECK_THROWS_AS(big + big, numerics_error);
}

TEST_CASE("comparisons") {
  const Quantity a(1.0, dims::mass);
  const Quantity b(2.0, dims::mass);
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a <= Quantity(1.0, dims::mass));
  CHECK(a == Quantity(1.0, dims::mass));
  CHECK_FALSE(a == Quantity(1.0, dims::length));  // different dims: unequal, no throw
  CHECK_THROWS_AS(static_cast<void>(a < Quantity(1.0, dims::length)), dimension_error);
}

TEST_CASE("value_in converts against a reference unit") {
  const Quantity m(1.86e-9, dims::mass);
  CHECK(m.value_in(Quantity(1e-9, dims::mass)) == Catch::Approx(1.86).epsilon(1e-15));
  CHECK_THROWS_AS(m.value_in(Quantity(1.0, dims::length)), dimension_error);
}

TEST_CASE("sqrt halves even exponents and rejects odd ones") {
  const Quantity a(9.0, dims::area);
  const Quantity r = sqrt(a);
  CHECK(r.dim() == dims::length);
  CHECK(r.magnitude() == 3.0);
  CHECK_THROWS_AS(sqrt(Quantity(4.0, dims::length)), dimension_error);
  CHECK_THROWS_AS(sqrt(Quantity(-1.0, dims::area)), domain_error);
}

TEST_CASE("pow_int") {
  const Quantity v(2.0, dims::velocity);
  const Quantity v3 = pow_int(v, 3);
  CHECK(v3.magnitude() == 8.0);
  CHECK(v3.dim() == dims::velocity.pow(3));
  CHECK(pow_int(v, 0).dim() == dims::scalar);
  CHECK(pow_int(v, -1).magnitude() == 0.5);
}

TEST_CASE("as_scalar accepts only dimensionless quantities") {
  CHECK(as_scalar(Quantity(7.0, dims::scalar), "x") == 7.0);
  const Quantity ratio = Quantity(6.0, dims::energy) / Quantity(3.0, dims::energy);
  CHECK(as_scalar(ratio, "ratio") == 2.0);
  CHECK_THROWS_AS(as_scalar(Quantity(1.0, dims::mass), "m"), dimension_error);
}

TEST_CASE("property: mul/div exponent bookkeeping over random dimensions") {
  std::mt19937 rng(20260816u);
  for (int i = 0; i < 200; ++i) {
    const Dimension da = random_dim(rng);
    const Dimension db = random_dim(rng);
    const double ma = random_mag(rng);
    const double mb = random_mag(rng);
    const Quantity a(ma, da);
    const Quantity b(mb, db);

    const Quantity prod = a * b;
    CHECK(prod.dim() == da + db);
    CHECK(prod.magnitude() == ma * mb);

    const Quantity quot = a / b;
    CHECK(quot.dim() == da - db);
    CHECK(quot.magnitude() == ma / mb);

    // a*b/b restores both the dimension and (up to rounding) the magnitude.
    const Quantity back = prod / b;
    CHECK(back.dim() == da);
    CHECK(back.magnitude() == Catch::Approx(ma).epsilon(1e-12));
  }
}

TEST_CASE("property: add/sub closed on a shared dimension, throws across") {
  std::mt19937 rng(987654321u);
  for (int i = 0; i < 200; ++i) {
    const Dimension d = random_dim(rng);
    const Quantity a(random_mag(rng), d);
    const Quantity b(random_mag(rng), d);
    CHECK((a + b).dim() == d);
    CHECK((a + b).magnitude() == a.magnitude() + b.magnitude());
    CHECK((a - b).dim() == d);

    Dimension other = d;
    other.time += 1;  // guaranteed distinct
    CHECK_THROWS_AS(a + Quantity(1.0, other), dimension_error);
  }
}

TEST_CASE("combine helper mirrors the operators") {
  const Quantity a(6.0, dims::energy);
  const Quantity b(3.0, dims::energy);
  CHECK(combine(a, b, combine_op::add).magnitude() == 9.0);
  CHECK(combine(a, b, combine_op::sub).magnitude() == 3.0);
  CHECK(combine(a, b, combine_op::mul).dim() == dims::energy + dims::energy);
  CHECK(combine(a, b, combine_op::div).dim() == dims::scalar);
}
