#pragma once

#include "gwlink/constants.hpp"
#include "gwlink/quantity.hpp"

namespace gwlink {

// ============================================================================
// Radiated power of an accelerated body, electromagnetic and gravitational,
// in the quadrupolar ("primed") Larmor form: a dimensionless prefactor kappa
// times the point-source Larmor power. kappa is a caller-supplied parameter,
// default 1; it is never pinned here because every ratio-level result in the
// model is kappa-free by construction.
// ============================================================================

/// One radiating body. Charge may carry either sign (only q^2 enters);
/// mass must be non-negative and kappa positive.
struct RadiatingBody {
  Quantity charge;        ///< dims::charge
  Quantity mass;          ///< dims::mass
  Quantity acceleration;  ///< dims::acceleration
  double kappa = 1.0;     ///< quadrupole prefactor, > 0
};

namespace detail {
inline void require_dim(const Quantity& q, const Dimension& want, const char* name) {
  if (q.dim() != want)
    throw dimension_error(std::string(name) + " must have dimension " + want.str() +
                          ", got " + q.dim().str());
}

inline void require_body(const RadiatingBody& b) {
  require_dim(b.charge, dims::charge, "charge");
  require_dim(b.mass, dims::mass, "mass");
  require_dim(b.acceleration, dims::acceleration, "acceleration");
  if (b.mass.magnitude() < 0.0) throw domain_error("mass must be non-negative");
  if (!(b.kappa > 0.0)) throw domain_error("kappa must be positive");
}
} // namespace detail

/// Dipole Larmor power of a point charge, SI form: (2/3) k_e q^2 a^2 / c^3.
[[nodiscard]] inline Quantity larmor_em_power(const Quantity& q, const Quantity& a) {
  detail::require_dim(q, dims::charge, "charge");
  detail::require_dim(a, dims::acceleration, "acceleration");
  const auto& k = constants();
  return (2.0 / 3.0) * k.k_e * q * q * a * a / (k.c * k.c * k.c);
}

/// Quadrupolar EM power: kappa times the Larmor power.
[[nodiscard]] inline Quantity quadrupolar_em_power(const RadiatingBody& body) {
  detail::require_body(body);
  return body.kappa * larmor_em_power(body.charge, body.acceleration);
}

/// Quadrupolar gravitational power: kappa (2/3) G m^2 a^2 / c^3. Same kappa
/// as the EM channel; for a body whose charge co-moves with its mass the two
/// emissions share the multipole structure.
[[nodiscard]] inline Quantity quadrupolar_gr_power(const RadiatingBody& body) {
  detail::require_body(body);
  const auto& k = constants();
  return body.kappa * (2.0 / 3.0) * k.G * body.mass * body.mass *
         body.acceleration * body.acceleration / (k.c * k.c * k.c);
}

/// GR/EM power quotient, G m^2 / (k_e q^2). Acceleration and kappa cancel
/// identically, so neither appears in the signature.
[[nodiscard]] inline double power_ratio(const Quantity& q, const Quantity& m) {
  detail::require_dim(q, dims::charge, "charge");
  detail::require_dim(m, dims::mass, "mass");
  if (q.magnitude() == 0.0)
    throw domain_error("power ratio undefined for zero charge");
  const auto& k = constants();
  return as_scalar(k.G * m * m / (k.k_e * q * q), "power ratio");
}

/// True when the gravitational channel is negligible against the EM one:
/// kappa * G m^2/(k_e q^2) below `threshold`.
[[nodiscard]] inline bool gr_negligible(const Quantity& q, const Quantity& m,
                                        double kappa, double threshold = 1e-3) {
  if (!(kappa > 0.0)) throw domain_error("kappa must be positive");
  if (!(threshold > 0.0)) throw domain_error("threshold must be positive");
  return kappa * power_ratio(q, m) < threshold;
}

/// Both channel powers of one body plus their kappa-free quotient.
struct PowerBreakdown {
  Quantity p_em;  ///< dims::power
  Quantity p_gr;  ///< dims::power
  double ratio;   ///< p_gr/p_em, independent of acceleration and kappa
};

[[nodiscard]] inline PowerBreakdown power_breakdown(const RadiatingBody& body) {
  return {quadrupolar_em_power(body), quadrupolar_gr_power(body),
          power_ratio(body.charge, body.mass)};
}

} // namespace gwlink
