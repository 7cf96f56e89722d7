#pragma once

#include <stdexcept>

namespace gwlink {

/// Root of the library's error hierarchy. Everything thrown deliberately
/// derives from this, so a caller can fence the whole library with one catch.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic on quantities whose dimension vectors are incompatible, or an
/// argument whose dimension is not the one a formula requires.
class dimension_error : public error {
public:
  using error::error;
};

/// Argument outside a formula's domain (non-positive radius, zero charge in a
/// charge-normalized ratio, and so on).
class domain_error : public error {
public:
  using error::error;
};

/// An integration contour that approaches a field singularity closer than the
/// configured clearance.
class singularity_error : public domain_error {
public:
  using domain_error::domain_error;
};

/// Invalid or inconsistent run configuration (unknown unit token, missing
/// field, value violating a spec invariant).
class config_error : public error {
public:
  using error::error;
};

/// Numerical failure: non-finite intermediate, division by zero, step-size
/// underflow in the integrator.
class numerics_error : public error {
public:
  using error::error;
};

} // namespace gwlink
