#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "gwlink/error.hpp"

namespace gwlink {

// ============================================================================
// Dimension: an exact integer exponent vector over the six SI base dimensions
// used here (mass, length, time, current, temperature, amount). Multiplying
// quantities adds vectors, dividing subtracts; no fractional exponents exist
// anywhere in the model, so integers suffice.
// ============================================================================

struct Dimension {
  int mass = 0;
  int length = 0;
  int time = 0;
  int current = 0;
  int temperature = 0;
  int amount = 0;

  friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

  [[nodiscard]] constexpr Dimension operator+(const Dimension& o) const {
    return {mass + o.mass,       length + o.length,
            time + o.time,       current + o.current,
            temperature + o.temperature, amount + o.amount};
  }

  [[nodiscard]] constexpr Dimension operator-(const Dimension& o) const {
    return {mass - o.mass,       length - o.length,
            time - o.time,       current - o.current,
            temperature - o.temperature, amount - o.amount};
  }

  /// Integer power of the dimension vector (scales every exponent).
  [[nodiscard]] constexpr Dimension pow(int k) const {
    return {mass * k, length * k, time * k, current * k, temperature * k, amount * k};
  }

  [[nodiscard]] constexpr bool dimensionless() const {
    return *this == Dimension{};
  }

  /// Human-readable form in SI base symbols, e.g. "kg m^2 s^-1"; "1" when
  /// dimensionless. Used only for error messages and report metadata.
  [[nodiscard]] std::string str() const {
    if (dimensionless()) return "1";
    std::string out;
    auto append = [&out](const char* sym, int exp) {
      if (exp == 0) return;
      if (!out.empty()) out += ' ';
      out += sym;
      if (exp != 1) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "^%d", exp);
        out += buf;
      }
    };
    append("kg", mass);
    append("m", length);
    append("s", time);
    append("A", current);
    append("K", temperature);
    append("mol", amount);
    return out;
  }
};

/// Named dimension vectors for the handful of kinds this model touches.
namespace dims {
inline constexpr Dimension scalar{};
inline constexpr Dimension mass{1, 0, 0, 0, 0, 0};
inline constexpr Dimension length{0, 1, 0, 0, 0, 0};
inline constexpr Dimension time{0, 0, 1, 0, 0, 0};
inline constexpr Dimension current{0, 0, 0, 1, 0, 0};
inline constexpr Dimension temperature{0, 0, 0, 0, 1, 0};
inline constexpr Dimension amount{0, 0, 0, 0, 0, 1};

inline constexpr Dimension area{0, 2, 0, 0, 0, 0};
inline constexpr Dimension frequency{0, 0, -1, 0, 0, 0};
inline constexpr Dimension velocity{0, 1, -1, 0, 0, 0};
inline constexpr Dimension acceleration{0, 1, -2, 0, 0, 0};
inline constexpr Dimension force{1, 1, -2, 0, 0, 0};
inline constexpr Dimension energy{1, 2, -2, 0, 0, 0};
inline constexpr Dimension power{1, 2, -3, 0, 0, 0};
inline constexpr Dimension charge{0, 0, 1, 1, 0, 0};
inline constexpr Dimension magnetic_flux_density{1, 0, -2, -1, 0, 0};
inline constexpr Dimension molar_mass{1, 0, 0, 0, 0, -1};
inline constexpr Dimension circulation{0, 2, -1, 0, 0, 0};
inline constexpr Dimension entropy{1, 2, -2, 0, -1, 0};
inline constexpr Dimension gravitational_constant{-1, 3, -2, 0, 0, 0};
inline constexpr Dimension coulomb_constant{1, 3, -4, -2, 0, 0};
/// Dimension of 16*pi*G/c: G (-1,3,-2) minus velocity (0,1,-1).
inline constexpr Dimension gw_impedance{-1, 2, -1, 0, 0, 0};
} // namespace dims

// ============================================================================
// Quantity: a finite real magnitude in coherent SI base units, tagged with a
// Dimension. Mismatched add/sub throws instead of silently coercing; a NaN or
// infinity never escapes an operation without an error.
// ============================================================================

class Quantity {
public:
  /// Dimensionless zero; lets aggregates default-construct before being filled.
  constexpr Quantity() = default;

  Quantity(double magnitude, const Dimension& dim) : mag_(magnitude), dim_(dim) {
    require_finite(magnitude, "construction");
  }

  [[nodiscard]] double magnitude() const { return mag_; }
  [[nodiscard]] const Dimension& dim() const { return dim_; }

  [[nodiscard]] Quantity operator+(const Quantity& o) const {
    require_same_dim(o, "add");
    return checked(mag_ + o.mag_, dim_, "add");
  }

  [[nodiscard]] Quantity operator-(const Quantity& o) const {
    require_same_dim(o, "subtract");
    return checked(mag_ - o.mag_, dim_, "subtract");
  }

  [[nodiscard]] Quantity operator-() const { return Quantity(-mag_, dim_); }

  [[nodiscard]] Quantity operator*(const Quantity& o) const {
    return checked(mag_ * o.mag_, dim_ + o.dim_, "multiply");
  }

  [[nodiscard]] Quantity operator/(const Quantity& o) const {
    if (o.mag_ == 0.0)
      throw numerics_error("division by zero (dividing " + dim_.str() + " by " + o.dim_.str() + ")");
    return checked(mag_ / o.mag_, dim_ - o.dim_, "divide");
  }

  [[nodiscard]] Quantity operator*(double s) const { return checked(mag_ * s, dim_, "scale"); }
  [[nodiscard]] Quantity operator/(double s) const {
    if (s == 0.0) throw numerics_error("division by zero scalar");
    return checked(mag_ / s, dim_, "scale");
  }
  friend Quantity operator*(double s, const Quantity& q) { return q * s; }

  /// Exact equality; quantities of different dimension are simply unequal.
  friend bool operator==(const Quantity& a, const Quantity& b) {
    return a.dim_ == b.dim_ && a.mag_ == b.mag_;
  }

  // Ordering across dimensions is a bug, not a comparison; reject it.
  friend bool operator<(const Quantity& a, const Quantity& b) {
    a.require_same_dim(b, "compare");
    return a.mag_ < b.mag_;
  }
  friend bool operator>(const Quantity& a, const Quantity& b) { return b < a; }
  friend bool operator<=(const Quantity& a, const Quantity& b) { return !(b < a); }
  friend bool operator>=(const Quantity& a, const Quantity& b) { return !(a < b); }

  /// Magnitude of this quantity expressed in multiples of `unit` (which must
  /// carry the same dimension), e.g. mass.value_in(microgram).
  [[nodiscard]] double value_in(const Quantity& unit) const {
    require_same_dim(unit, "convert");
    if (unit.mag_ == 0.0) throw numerics_error("conversion by zero-magnitude unit");
    return mag_ / unit.mag_;
  }

private:
  static void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
      throw numerics_error(std::string("non-finite magnitude in ") + what);
  }

  void require_same_dim(const Quantity& o, const char* what) const {
    if (dim_ != o.dim_)
      throw dimension_error(std::string("cannot ") + what + " " + dim_.str() +
                            " and " + o.dim_.str());
  }

  static Quantity checked(double v, const Dimension& d, const char* what) {
    require_finite(v, what);
    Quantity q;
    q.mag_ = v;
    q.dim_ = d;
    return q;
  }

  double mag_ = 0.0;
  Dimension dim_{};
};

/// The four arithmetic combinations behind one switch, for callers that pick
/// the operator at runtime (the CLI expression path and the property tests).
enum class combine_op { add, sub, mul, div };

[[nodiscard]] inline Quantity combine(const Quantity& a, const Quantity& b, combine_op op) {
  switch (op) {
    case combine_op::add: return a + b;
    case combine_op::sub: return a - b;
    case combine_op::mul: return a * b;
    case combine_op::div: return a / b;
  }
  throw domain_error("unknown combine operator");
}

/// Square root; requires every dimension exponent to be even.
[[nodiscard]] inline Quantity sqrt(const Quantity& q) {
  const Dimension& d = q.dim();
  if (d.mass % 2 || d.length % 2 || d.time % 2 || d.current % 2 ||
      d.temperature % 2 || d.amount % 2)
    throw dimension_error("sqrt of " + d.str() + " has no integer dimension");
  if (q.magnitude() < 0.0)
    throw domain_error("sqrt of negative quantity");
  return Quantity(std::sqrt(q.magnitude()),
                  Dimension{d.mass / 2, d.length / 2, d.time / 2, d.current / 2,
                            d.temperature / 2, d.amount / 2});
}

/// Integer power.
[[nodiscard]] inline Quantity pow_int(const Quantity& q, int k) {
  Quantity out(1.0, dims::scalar);
  Quantity base = q;
  int n = k;
  if (n < 0) {
    base = Quantity(1.0, dims::scalar) / q;
    n = -n;
  }
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

/// Dimensionless magnitude, throwing if the quantity is not dimensionless.
/// The boundary through which Quantity results reach plain-double consumers.
[[nodiscard]] inline double as_scalar(const Quantity& q, const char* what = "value") {
  if (!q.dim().dimensionless())
    throw dimension_error(std::string(what) + " must be dimensionless, got " + q.dim().str());
  return q.magnitude();
}

} // namespace gwlink
