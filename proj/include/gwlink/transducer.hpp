#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gwlink/constants.hpp"
#include "gwlink/quantity.hpp"
#include "gwlink/radiation.hpp"

namespace gwlink {

// ============================================================================
// The charged-superfluid-drop transducer model: characteristic mass scales,
// atom-count enhancement, excitation gaps and zero-phonon response, quantized
// vortex circulation, and the reciprocity-constrained scattering channels of
// a drop pair.
// ============================================================================

/// One levitated drop. Charge is always n_electrons * e, derived on demand
/// and never stored separately.
struct DropSpec {
  Quantity mass;                                 ///< dims::mass, > 0
  int n_electrons = 1;                           ///< >= 1
  Quantity radius;                               ///< dims::length, > 0
  Quantity temperature;                          ///< dims::temperature, > 0
  Quantity b_field;                              ///< dims::magnetic_flux_density, >= 0
  Quantity molar_mass = helium4_molar_mass();    ///< dims::molar_mass, > 0
  double kappa = 1.0;                            ///< quadrupole prefactor, > 0
};

/// Two drops separated by roughly a wavelength: the antenna unit.
struct TransducerPair {
  DropSpec drop_a;
  DropSpec drop_b;
  Quantity separation;  ///< dims::length, > drop_a.radius + drop_b.radius
  Quantity frequency;   ///< dims::frequency, > 0
};

enum class ChannelKind { em, gr };

/// A scattering channel: radiation kind plus a free-form label for the
/// incoming/outgoing wave tag. Corresponding channels differ only in kind.
struct ChannelMode {
  ChannelKind kind = ChannelKind::em;
  std::string label;
};

inline void validate_drop(const DropSpec& d) {
  detail::require_dim(d.mass, dims::mass, "mass");
  detail::require_dim(d.radius, dims::length, "radius");
  detail::require_dim(d.temperature, dims::temperature, "temperature");
  detail::require_dim(d.b_field, dims::magnetic_flux_density, "b_field");
  detail::require_dim(d.molar_mass, dims::molar_mass, "molar_mass");
  if (!(d.mass.magnitude() > 0.0)) throw domain_error("mass must be positive");
  if (d.n_electrons < 1) throw domain_error("n_electrons must be at least 1");
  if (!(d.radius.magnitude() > 0.0)) throw domain_error("radius must be positive");
  if (!(d.temperature.magnitude() > 0.0)) throw domain_error("temperature must be positive");
  if (d.b_field.magnitude() < 0.0) throw domain_error("b_field must be non-negative");
  if (!(d.molar_mass.magnitude() > 0.0)) throw domain_error("molar_mass must be positive");
  if (!(d.kappa > 0.0)) throw domain_error("kappa must be positive");
}

inline void validate_pair(const TransducerPair& p) {
  validate_drop(p.drop_a);
  validate_drop(p.drop_b);
  detail::require_dim(p.separation, dims::length, "separation");
  detail::require_dim(p.frequency, dims::frequency, "frequency");
  if (!(p.separation > p.drop_a.radius + p.drop_b.radius))
    throw domain_error("separation must exceed the sum of the drop radii");
  if (!(p.frequency.magnitude() > 0.0)) throw domain_error("frequency must be positive");
}

/// Total charge of a drop, n_electrons * e.
[[nodiscard]] inline Quantity drop_charge(const DropSpec& d) {
  return static_cast<double>(d.n_electrons) * constants().e;
}

// ----------------------------------------------------------------------------
// Mass scales
// ----------------------------------------------------------------------------

/// sqrt(hbar c / G), about 22 micrograms: the scale where a drop's
/// gravitational coupling reaches its electron-charge EM coupling times 1/alpha.
[[nodiscard]] inline Quantity planck_mass() {
  const auto& k = constants();
  return sqrt(k.hbar * k.c / k.G);
}

/// Mass at which gravitational attraction balances the Coulomb repulsion of
/// n attached electrons: n * sqrt(alpha) * planck_mass, about 1.9 ug for n=1.
/// Scales linearly in n because the charge-to-mass ratio is what is fixed.
[[nodiscard]] inline Quantity critical_mass(int n_electrons) {
  if (n_electrons < 1) throw domain_error("n_electrons must be at least 1");
  return static_cast<double>(n_electrons) * std::sqrt(constants().alpha()) * planck_mass();
}

/// Gravitational-to-Coulomb force magnitude ratio of two charged drops,
/// G m_a m_b / (k_e q_a q_b). Separation cancels (both laws inverse-square).
[[nodiscard]] inline double force_ratio(const DropSpec& a, const DropSpec& b) {
  validate_drop(a);
  validate_drop(b);
  const auto& k = constants();
  const Quantity qa = drop_charge(a);
  const Quantity qb = drop_charge(b);
  if (qa.magnitude() == 0.0 || qb.magnitude() == 0.0)
    throw domain_error("force ratio undefined for an uncharged drop");
  return as_scalar(k.G * a.mass * b.mass / (k.k_e * qa * qb), "force ratio");
}

// ----------------------------------------------------------------------------
// Atom count and coherent enhancement
// ----------------------------------------------------------------------------

/// Number of atoms in the drop, mass * N_A / molar_mass.
[[nodiscard]] inline double atom_count(const DropSpec& d) {
  validate_drop(d);
  return as_scalar(d.mass * constants().N_A / d.molar_mass, "atom count");
}

/// Coherent (Dicke-like) gain of rigid-body emission over independent atoms:
/// atom_count squared. Identically the m^2 dependence of the quadrupolar GR
/// power evaluated at the drop mass, expressed per atom.
[[nodiscard]] inline double enhancement_factor(const DropSpec& d) {
  const double n = atom_count(d);
  return n * n;
}

// ----------------------------------------------------------------------------
// Excitation gap and zero-phonon response
// ----------------------------------------------------------------------------

/// Cyclotron energy gap of a trapped electron, hbar e B / m_e.
[[nodiscard]] inline Quantity cyclotron_gap(const Quantity& b_field) {
  detail::require_dim(b_field, dims::magnetic_flux_density, "b_field");
  if (!(b_field.magnitude() > 0.0))
    throw domain_error("cyclotron gap requires a positive field");
  const auto& k = constants();
  return k.hbar * k.e * b_field / k.m_e;
}

/// Probability that a recoil excites no internal quantum across the gap:
/// 1 - exp(-e_gap / k_B T). Zero at zero gap, approaching 1 when the gap
/// dwarfs the thermal energy; strictly increasing in e_gap, decreasing in T.
[[nodiscard]] inline double zero_phonon_probability(const Quantity& e_gap, const Quantity& T) {
  detail::require_dim(e_gap, dims::energy, "e_gap");
  detail::require_dim(T, dims::temperature, "temperature");
  if (!(T.magnitude() > 0.0)) throw domain_error("temperature must be positive");
  if (e_gap.magnitude() < 0.0) throw domain_error("e_gap must be non-negative");
  const double x = as_scalar(e_gap / (constants().k_B * T), "gap ratio");
  // expm1 keeps small-x accuracy; the clamp keeps the saturated regime inside
  // the contractual half-open range (the true value is always < 1, but
  // 1 - exp(-x) rounds to 1.0 once x exceeds ~37).
  return std::min(-std::expm1(-x), std::nextafter(1.0, 0.0));
}

// ----------------------------------------------------------------------------
// Vortex circulation
// ----------------------------------------------------------------------------

/// A closed contour in the plane transverse to a single vortex line pinned at
/// the origin. Either a parametric circle (center offset + radius) or a closed
/// polyline (first vertex repeated last). Self-intersection is the caller's
/// responsibility; it is not detected here.
class VortexLoop {
public:
  using Point = std::array<double, 2>;  ///< meters

  [[nodiscard]] static VortexLoop circle(Point center, double radius_m) {
    if (!(radius_m > 0.0)) throw domain_error("circle radius must be positive");
    VortexLoop loop;
    loop.is_circle_ = true;
    loop.center_ = center;
    loop.radius_ = radius_m;
    return loop;
  }

  [[nodiscard]] static VortexLoop polyline(std::vector<Point> vertices) {
    if (vertices.size() < 4)
      throw domain_error("closed polyline needs at least 3 distinct vertices");
    const Point& first = vertices.front();
    const Point& last = vertices.back();
    if (first[0] != last[0] || first[1] != last[1])
      throw domain_error("polyline must be closed (first vertex == last vertex)");
    VortexLoop loop;
    loop.vertices_ = std::move(vertices);
    return loop;
  }

  [[nodiscard]] bool is_circle() const { return is_circle_; }
  [[nodiscard]] const Point& center() const { return center_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }

  /// Characteristic size: largest distance of any path point from the vortex.
  [[nodiscard]] double scale() const {
    if (is_circle_)
      return std::hypot(center_[0], center_[1]) + radius_;
    double s = 0.0;
    for (const auto& v : vertices_) s = std::max(s, std::hypot(v[0], v[1]));
    return s;
  }

  /// Smallest distance between the path and the vortex at the origin.
  [[nodiscard]] double clearance() const {
    if (is_circle_)
      return std::abs(std::hypot(center_[0], center_[1]) - radius_);
    double best = std::hypot(vertices_[0][0], vertices_[0][1]);
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
      best = std::min(best, segment_distance(vertices_[i], vertices_[i + 1]));
    return best;
  }

private:
  // Distance from the origin to segment ab.
  static double segment_distance(const Point& a, const Point& b) {
    const double dx = b[0] - a[0];
    const double dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(-(a[0] * dx + a[1] * dy) / len2, 0.0, 1.0);
    return std::hypot(a[0] + t * dx, a[1] + t * dy);
  }

  bool is_circle_ = false;
  Point center_{0.0, 0.0};
  double radius_ = 0.0;
  std::vector<Point> vertices_;
};

namespace detail {

// Adaptive Simpson on [a,b] with absolute tolerance, classic halving scheme.
// `floor` is a fixed resolution limit: near a close approach to the core the
// integrand is evaluated with cancellation noise proportional to its own size,
// and the noise in `delta` shrinks with the interval exactly as fast as the
// halved tolerance does, so without a depth-independent floor the recursion
// would chase roundoff until the budget runs out. Accepting at the floor adds
// at most ~(leaf count) * floor, far inside the quantization contract when the
// floor sits at machine resolution of the coarse |integral| estimate.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, double floor, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps || std::abs(delta) <= floor)
    return left + right + delta / 15.0;
  if (depth <= 0)
    throw numerics_error("circulation quadrature did not converge");
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, floor, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, floor, depth - 1);
}

template <class F>
double integrate_adaptive(const F& f, double a, double b, double eps) {
  // Seed with a few panels so narrow features near the closest approach to
  // the vortex are not missed by the first Simpson estimate.
  constexpr int panels = 8;
  std::array<double, panels> lo, mid, hi, whole;
  const double h = (b - a) / panels;
  double coarse = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h;
    const double x1 = x0 + h;
    lo[i] = f(x0);
    mid[i] = f(0.5 * (x0 + x1));
    hi[i] = f(x1);
    whole[i] = (x1 - x0) / 6.0 * (lo[i] + 4.0 * mid[i] + hi[i]);
    coarse += std::abs(whole[i]);
  }
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * coarse;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h;
    total += adaptive_simpson(f, x0, x0 + h, lo[i], mid[i], hi[i], whole[i], eps / panels,
                              floor, 48);
  }
  return total;
}

} // namespace detail

/// Line integral of the superfluid velocity field v = (hbar / m_He4) * e_phi / rho
/// around the loop, via adaptive quadrature. Equals 2 pi hbar / m_He4 for any
/// contour enclosing the vortex once (positively), 0 for a non-enclosing one.
/// The pure point-vortex profile has no core regularization, so the loop must
/// keep `min_clearance_rel` * loop-scale away from the origin.
[[nodiscard]] inline Quantity circulation(const VortexLoop& loop,
                                          double min_clearance_rel = 1e-9) {
  const auto& k = constants();
  const double strength = as_scalar(k.hbar / k.m_He4 / Quantity(1.0, dims::circulation),
                                    "vortex strength");  // m^2/s
  const double scale = loop.scale();
  if (!(scale > 0.0)) throw domain_error("degenerate loop");
  if (loop.clearance() < min_clearance_rel * scale)
    throw singularity_error("loop passes through the vortex core region");

  // v(p) . dl with v = strength * (-y, x)/rho^2.
  const auto field_dot = [strength](double x, double y, double dx, double dy) {
    const double rho2 = x * x + y * y;
    return strength * (-y * dx + x * dy) / rho2;
  };

  const double quantum = 2.0 * 3.14159265358979323846 * strength;
  const double eps = 1e-13 * quantum;

  double total = 0.0;
  if (loop.is_circle()) {
    const auto& c = loop.center();
    const double R = loop.radius();
    const auto f = [&](double th) {
      const double x = c[0] + R * std::cos(th);
      const double y = c[1] + R * std::sin(th);
      return field_dot(x, y, -R * std::sin(th), R * std::cos(th));
    };
    total = detail::integrate_adaptive(f, 0.0, 2.0 * 3.14159265358979323846, eps);
  } else {
    const auto& v = loop.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      const double ax = v[i][0], ay = v[i][1];
      const double dx = v[i + 1][0] - ax, dy = v[i + 1][1] - ay;
      const auto f = [&](double t) {
        return field_dot(ax + t * dx, ay + t * dy, dx, dy);
      };
      total += detail::integrate_adaptive(f, 0.0, 1.0, eps / static_cast<double>(v.size()));
    }
  }
  return Quantity(total, dims::circulation);
}

// ----------------------------------------------------------------------------
// Scattering channels of a drop pair
// ----------------------------------------------------------------------------

/// Total scattering cross-section estimate: the geometric area
/// pi (R_a^2 + R_b^2), i.e. 2 pi R^2 for equal radii. An order-of-magnitude
/// estimator; reports tag it as such.
[[nodiscard]] inline Quantity geometric_cross_section(const TransducerPair& p) {
  validate_pair(p);
  return 3.14159265358979323846 *
         (p.drop_a.radius * p.drop_a.radius + p.drop_b.radius * p.drop_b.radius);
}

/// kappa-free GR/EM power quotient of one drop, rho = G m^2 / (k_e (n e)^2).
[[nodiscard]] inline double drop_power_ratio(const DropSpec& d) {
  validate_drop(d);
  return power_ratio(drop_charge(d), d.mass);
}

namespace detail {
// Pair-level quotient: geometric mean of the two drops' quotients, matching
// the efficiency combination rule for asymmetric pairs.
inline double pair_power_ratio(const TransducerPair& p) {
  return std::sqrt(drop_power_ratio(p.drop_a) * drop_power_ratio(p.drop_b));
}
} // namespace detail

/// Channel cross-section of the pair. The total geometric cross-section splits
/// into a conversion channel (incoming and outgoing kinds differ) weighted
/// rho/(1+rho) and a pass-through channel (kinds equal) weighted 1/(1+rho).
/// Time-reversal symmetry demands sigma(x->y) == sigma(y->x); together with
/// per-in-kind conservation against the single total, that forces the weight
/// to depend only on whether the kinds differ, never on their order. The two
/// channels therefore sum to sigma_total for either incoming kind, and the
/// conversion channel is identical in both directions by construction.
[[nodiscard]] inline Quantity scatter_cross_section(const TransducerPair& p,
                                                    const ChannelMode& in_mode,
                                                    const ChannelMode& out_mode) {
  const Quantity sigma_total = geometric_cross_section(p);
  const double rho = detail::pair_power_ratio(p);
  const double branching =
      (in_mode.kind == out_mode.kind) ? 1.0 / (1.0 + rho) : rho / (1.0 + rho);
  return sigma_total * branching;
}

/// Fraction of incident power a pair scatters into the opposite channel:
/// eta = rho/(1+rho) per drop, combined across an asymmetric pair as the
/// geometric mean. 0.5 at the critical mass, ~rho for rho << 1.
[[nodiscard]] inline double conversion_efficiency(const TransducerPair& p) {
  const double ra = drop_power_ratio(p.drop_a);
  const double rb = drop_power_ratio(p.drop_b);
  return std::sqrt((ra / (1.0 + ra)) * (rb / (1.0 + rb)));
}

} // namespace gwlink
