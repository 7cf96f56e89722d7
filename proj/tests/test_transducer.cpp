#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <gwlink/constants.hpp>
#include <gwlink/radiation.hpp>
#include <gwlink/transducer.hpp>

using namespace gwlink;

namespace {

DropSpec make_drop(double mass_kg, int n = 1, double radius_m = 1e-3,
                   double temp_K = 0.01, double b_T = 1.0) {
  DropSpec d;
  d.mass = Quantity(mass_kg, dims::mass);
  d.n_electrons = n;
  d.radius = Quantity(radius_m, dims::length);
  d.temperature = Quantity(temp_K, dims::temperature);
  d.b_field = Quantity(b_T, dims::magnetic_flux_density);
  return d;
}

TransducerPair make_pair(const DropSpec& a, const DropSpec& b, double sep_m = 0.025) {
  TransducerPair p;
  p.drop_a = a;
  p.drop_b = b;
  p.separation = Quantity(sep_m, dims::length);
  p.frequency = Quantity(12e9, dims::frequency);
  return p;
}

constexpr double planck_mass_oracle = 2.1764343420511267e-8;     // sqrt(hbar c / G)
constexpr double critical_mass_oracle = 1.8592090938345373e-9;   // sqrt(alpha) * planck

} // namespace

TEST_CASE("mass scales from the pinned constants") {
  CHECK(planck_mass().dim() == dims::mass);
  CHECK(planck_mass().magnitude() == Catch::Approx(planck_mass_oracle).epsilon(1e-14));
  CHECK(critical_mass(1).magnitude() == Catch::Approx(critical_mass_oracle).epsilon(1e-14));
  // about 22 ug and 1.9 ug respectively
  CHECK(planck_mass().magnitude() * 1e9 == Catch::Approx(22.0).margin(0.44));
  CHECK(critical_mass(1).magnitude() * 1e9 == Catch::Approx(1.9).margin(0.057));
}

TEST_CASE("critical mass scales linearly in the electron count") {
  for (int n : {2, 3, 10, 100})
    CHECK(critical_mass(n).magnitude() ==
          Catch::Approx(n * critical_mass(1).magnitude()).epsilon(1e-14));
  CHECK_THROWS_AS(critical_mass(0), domain_error);
  CHECK_THROWS_AS(critical_mass(-2), domain_error);
}

TEST_CASE("power ratio is exactly 1 at the critical mass") {
  const auto& k = constants();
  for (int n : {1, 2, 7}) {
    const double rho = power_ratio(static_cast<double>(n) * k.e, critical_mass(n));
    CHECK(rho == Catch::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("force ratio of two electron-mass drops reproduces the power ratio") {
  const auto& k = constants();
  DropSpec e_drop = make_drop(k.m_e.magnitude());
  const double fr = force_ratio(e_drop, e_drop);
  CHECK(fr == Catch::Approx(2.4006095051362923e-43).epsilon(1e-14));
  CHECK(fr == Catch::Approx(power_ratio(k.e, k.m_e)).epsilon(1e-14));
}

TEST_CASE("force ratio at the Planck mass is the inverse fine-structure constant") {
  DropSpec p_drop = make_drop(planck_mass().magnitude());
  CHECK(force_ratio(p_drop, p_drop) == Catch::Approx(137.0359989995517).epsilon(1e-12));
}

TEST_CASE("force ratio is exactly 1 for critical-mass drops at any electron count") {
  for (int n : {1, 2, 5}) {
    DropSpec d = make_drop(critical_mass(n).magnitude(), n);
    CHECK(force_ratio(d, d) == Catch::Approx(1.0).epsilon(1e-12));
  }
  // Mixed counts still land on 1: the charge-to-mass ratio is what is fixed.
  DropSpec a = make_drop(critical_mass(1).magnitude(), 1);
  DropSpec b = make_drop(critical_mass(3).magnitude(), 3);
  CHECK(force_ratio(a, b) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("force ratio is symmetric and separation-free") {
  DropSpec a = make_drop(1e-9, 1);
  DropSpec b = make_drop(5e-8, 2);
  CHECK(force_ratio(a, b) == force_ratio(b, a));
}

TEST_CASE("atom counts of the two landmark drops") {
  DropSpec planck_drop = make_drop(planck_mass().magnitude());
  DropSpec crit_drop = make_drop(critical_mass(1).magnitude());
  CHECK(atom_count(planck_drop) == Catch::Approx(3.27456735917e18).epsilon(1e-9));
  CHECK(atom_count(crit_drop) == Catch::Approx(2.79728420698e17).epsilon(1e-9));
  // floor(log10): 18 and 17 — the "exponent" claims in prose.
  CHECK(std::floor(std::log10(atom_count(planck_drop))) == 18.0);
  CHECK(std::floor(std::log10(atom_count(crit_drop))) == 17.0);
}

TEST_CASE("atom count follows mass over molar mass exactly") {
  const auto& k = constants();
  DropSpec d = make_drop(3.7e-9);
  const double expect =
      3.7e-9 * k.N_A.magnitude() / helium4_molar_mass().magnitude();
  CHECK(atom_count(d) == Catch::Approx(expect).epsilon(1e-14));
}

TEST_CASE("coherent enhancement is the square of the atom count") {
  DropSpec planck_drop = make_drop(planck_mass().magnitude());
  CHECK(enhancement_factor(planck_drop) ==
        Catch::Approx(1.07227913897e37).epsilon(1e-9));
  DropSpec d = make_drop(2e-9);
  const double n = atom_count(d);
  CHECK(enhancement_factor(d) == Catch::Approx(n * n).epsilon(1e-14));
}

TEST_CASE("cyclotron gap at one tesla") {
  const Quantity gap = cyclotron_gap(Quantity(1.0, dims::magnetic_flux_density));
  CHECK(gap.dim() == dims::energy);
  CHECK(gap.magnitude() == Catch::Approx(1.85480201453596e-23).epsilon(1e-12));
  // in kelvin: divide by k_B
  const double kelvin = gap.magnitude() / constants().k_B.magnitude();
  CHECK(kelvin == Catch::Approx(1.34342763044).epsilon(1e-11));
}

TEST_CASE("cyclotron gap is linear in the field and gapless fields are rejected") {
  const Quantity b(0.35, dims::magnetic_flux_density);
  CHECK(cyclotron_gap(2.0 * b).magnitude() ==
        Catch::Approx(2.0 * cyclotron_gap(b).magnitude()).epsilon(1e-14));
  CHECK_THROWS_AS(cyclotron_gap(Quantity(0.0, dims::magnetic_flux_density)), domain_error);
  CHECK_THROWS_AS(cyclotron_gap(Quantity(-1.0, dims::magnetic_flux_density)), domain_error);
  CHECK_THROWS_AS(cyclotron_gap(Quantity(1.0, dims::temperature)), dimension_error);
}

TEST_CASE("zero-phonon probability basics") {
  const Quantity T(0.01, dims::temperature);
  CHECK(zero_phonon_probability(Quantity(0.0, dims::energy), T) == 0.0);
  // E = k_B T ln 2 gives exactly one half.
  const Quantity e_half = constants().k_B * T * std::log(2.0);
  CHECK(zero_phonon_probability(e_half, T) == Catch::Approx(0.5).epsilon(1e-12));
  // 1 T gap at 10 mK: within 1e-15 of certainty.
  const Quantity gap = cyclotron_gap(Quantity(1.0, dims::magnetic_flux_density));
  CHECK(zero_phonon_probability(gap, T) == Catch::Approx(1.0).epsilon(1e-15));
  CHECK(zero_phonon_probability(gap, T) < 1.0);
}

TEST_CASE("zero-phonon probability domain and range") {
  const Quantity T(0.5, dims::temperature);
  CHECK_THROWS_AS(zero_phonon_probability(Quantity(1e-23, dims::energy),
                                          Quantity(0.0, dims::temperature)),
                  domain_error);
  CHECK_THROWS_AS(zero_phonon_probability(Quantity(-1e-23, dims::energy), T), domain_error);
  std::mt19937 rng(777u);
  std::uniform_real_distribution<double> log_gap(-26.0, -20.0);
  std::uniform_real_distribution<double> log_t(-3.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double p = zero_phonon_probability(
        Quantity(std::pow(10.0, log_gap(rng)), dims::energy),
        Quantity(std::pow(10.0, log_t(rng)), dims::temperature));
    CHECK(p >= 0.0);
    CHECK(p < 1.0);
  }
}

TEST_CASE("zero-phonon probability is monotone in both arguments") {
  // 20x20 grid: increasing in the gap at fixed T, decreasing in T at fixed
  // gap. The grid keeps gap/(k_B T) below ~15 so no cell saturates at the
  // representable ceiling, where strict inequality would be unobservable.
  std::vector<double> gaps, temps;
  for (int i = 0; i < 20; ++i) {
    gaps.push_back(1e-25 * (1.0 + i));
    temps.push_back(0.01 * (1.0 + i));
  }
  for (int ti = 0; ti < 20; ++ti)
    for (int gi = 0; gi + 1 < 20; ++gi) {
      const Quantity T(temps[ti], dims::temperature);
      CHECK(zero_phonon_probability(Quantity(gaps[gi], dims::energy), T) <
            zero_phonon_probability(Quantity(gaps[gi + 1], dims::energy), T));
    }
  for (int gi = 0; gi < 20; ++gi)
    for (int ti = 0; ti + 1 < 20; ++ti) {
      const Quantity gap(gaps[gi], dims::energy);
      CHECK(zero_phonon_probability(gap, Quantity(temps[ti], dims::temperature)) >
            zero_phonon_probability(gap, Quantity(temps[ti + 1], dims::temperature)));
    }
}

TEST_CASE("geometric cross-section") {
  DropSpec a = make_drop(1.86e-9);
  TransducerPair p = make_pair(a, a);
  const Quantity sigma = geometric_cross_section(p);
  CHECK(sigma.dim() == dims::area);
  // equal radii R: 2 pi R^2; R = 1 mm -> 6.28e-6 m^2
  CHECK(sigma.magnitude() ==
        Catch::Approx(2.0 * 3.14159265358979323846 * 1e-6).epsilon(1e-14));
  // doubling R quadruples it
  DropSpec big = make_drop(1.86e-9, 1, 2e-3);
  CHECK(geometric_cross_section(make_pair(big, big)).magnitude() ==
        Catch::Approx(4.0 * sigma.magnitude()).epsilon(1e-14));
  // unequal radii: pi (Ra^2 + Rb^2)
  CHECK(geometric_cross_section(make_pair(a, big)).magnitude() ==
        Catch::Approx(3.14159265358979323846 * (1e-6 + 4e-6)).epsilon(1e-14));
}

TEST_CASE("scattering: reciprocity is bit-identical for every mode pairing") {
  const ChannelMode em{ChannelKind::em, "em"};
  const ChannelMode gr{ChannelKind::gr, "gr"};
  DropSpec a = make_drop(1.1e-9, 1);
  DropSpec b = make_drop(4.0e-9, 2, 1.4e-3);
  TransducerPair p = make_pair(a, b);
  for (const auto& in : {em, gr})
    for (const auto& out : {em, gr}) {
      const double fwd = scatter_cross_section(p, in, out).magnitude();
      const double rev = scatter_cross_section(p, out, in).magnitude();
      CHECK(fwd == rev);  // exact, not approximate
    }
}

TEST_CASE("scattering: per-in-kind branches sum to the total cross-section") {
  const ChannelMode em{ChannelKind::em, "em"};
  const ChannelMode gr{ChannelKind::gr, "gr"};
  DropSpec a = make_drop(critical_mass(1).magnitude());
  DropSpec b = make_drop(8e-10, 1, 0.7e-3);
  TransducerPair p = make_pair(a, b);
  const double total = geometric_cross_section(p).magnitude();
  for (const auto& in : {em, gr}) {
    const double sum = scatter_cross_section(p, in, em).magnitude() +
                       scatter_cross_section(p, in, gr).magnitude();
    CHECK(sum == Catch::Approx(total).epsilon(1e-14));
  }
}

TEST_CASE("scattering: critical-mass pair splits the channels evenly") {
  const ChannelMode em{ChannelKind::em, "em"};
  const ChannelMode gr{ChannelKind::gr, "gr"};
  DropSpec d = make_drop(critical_mass(1).magnitude());
  TransducerPair p = make_pair(d, d);
  const double total = geometric_cross_section(p).magnitude();
  CHECK(scatter_cross_section(p, em, gr).magnitude() ==
        Catch::Approx(total / 2.0).epsilon(1e-12));
  CHECK(scatter_cross_section(p, em, em).magnitude() ==
        Catch::Approx(total / 2.0).epsilon(1e-12));
}

TEST_CASE("scattering: electron-mass pair converts almost nothing") {
  const auto& k = constants();
  const ChannelMode em{ChannelKind::em, "em"};
  const ChannelMode gr{ChannelKind::gr, "gr"};
  DropSpec d = make_drop(k.m_e.magnitude());
  TransducerPair p = make_pair(d, d);
  const double total = geometric_cross_section(p).magnitude();
  const double rho = 2.4006095051362923e-43;
  CHECK(scatter_cross_section(p, em, gr).magnitude() ==
        Catch::Approx(total * rho / (1.0 + rho)).epsilon(1e-12));
}

TEST_CASE("conversion efficiency") {
  DropSpec crit = make_drop(critical_mass(1).magnitude());
  TransducerPair p = make_pair(crit, crit);
  CHECK(conversion_efficiency(p) == Catch::Approx(0.5).epsilon(1e-12));

  // Efficiency collapses with the mass at fixed charge.
  DropSpec light = make_drop(1e-12);
  CHECK(conversion_efficiency(make_pair(light, light)) < 1e-6);

  const auto& k = constants();
  DropSpec e_drop = make_drop(k.m_e.magnitude());
  CHECK(conversion_efficiency(make_pair(e_drop, e_drop)) ==
        Catch::Approx(2.4006095051362923e-43).epsilon(1e-6));

  // Asymmetric pair: geometric mean of the per-drop branching fractions.
  DropSpec other = make_drop(0.5 * critical_mass(1).magnitude());
  const double ea = 0.5;
  const double rho_b = power_ratio(k.e, other.mass);
  const double eb = rho_b / (1.0 + rho_b);
  CHECK(conversion_efficiency(make_pair(crit, other)) ==
        Catch::Approx(std::sqrt(ea * eb)).epsilon(1e-12));
}

TEST_CASE("drop and pair validation") {
  DropSpec good = make_drop(1e-9);
  CHECK_NOTHROW(validate_drop(good));

  DropSpec bad = good;
  bad.mass = Quantity(0.0, dims::mass);
  CHECK_THROWS_AS(validate_drop(bad), domain_error);
  bad = good;
  bad.n_electrons = 0;
  CHECK_THROWS_AS(validate_drop(bad), domain_error);
  bad = good;
  bad.radius = Quantity(-1e-3, dims::length);
  CHECK_THROWS_AS(validate_drop(bad), domain_error);
  bad = good;
  bad.temperature = Quantity(0.0, dims::temperature);
  CHECK_THROWS_AS(validate_drop(bad), domain_error);
  bad = good;
  bad.b_field = Quantity(-0.1, dims::magnetic_flux_density);
  CHECK_THROWS_AS(validate_drop(bad), domain_error);
  bad = good;
  bad.kappa = 0.0;
  CHECK_THROWS_AS(validate_drop(bad), domain_error);
  bad = good;
  bad.mass = Quantity(1e-9, dims::length);  // wrong dimension
  CHECK_THROWS_AS(validate_drop(bad), dimension_error);

  // Pair: drops must not overlap.
  TransducerPair touching = make_pair(good, good, 1.9e-3);
  CHECK_THROWS_AS(validate_pair(touching), domain_error);
  TransducerPair ok = make_pair(good, good, 2.1e-3);
  CHECK_NOTHROW(validate_pair(ok));
  ok.frequency = Quantity(0.0, dims::frequency);
  CHECK_THROWS_AS(validate_pair(ok), domain_error);
}

TEST_CASE("drop charge") {
  const auto& k = constants();
  DropSpec d = make_drop(1e-9, 3);
  CHECK(drop_charge(d).dim() == dims::charge);
  CHECK(drop_charge(d).magnitude() == Catch::Approx(3.0 * k.e.magnitude()).epsilon(1e-15));
}
