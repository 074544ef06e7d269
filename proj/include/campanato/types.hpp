#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace campanato {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error hierarchy. Every failure an operation can report derives from Error so
// callers (the batch harness in particular) can catch per row.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the operation (|z| >= 1 for a boundary
/// singular function, |b| >= 1, vanishing Mobius denominator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The discretization cannot resolve the requested object.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A ratio whose denominator vanishes while the numerator does not.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Nevanlinna counting function evaluated at a value attained at z = 0.
class InfiniteValueError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Radial weight (1-r)^s with s <= -1 is not integrable at r = 1.
class SingularWeightError : public Error {
 public:
  using Error::Error;
};

class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Throws DomainError unless both components of z are finite.
inline Complex checked(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite value");
  }
  return z;
}

/// A boundary subarc. `length` is normalized: arclength / (2 pi), in (0, 1].
struct Arc {
  double center_angle = 0.0;
  double length = 1.0;

  Arc() = default;
  Arc(double center, double normalized_length);
};

/// Report flags. Bit set so a single row can carry several.
enum class Flag : std::uint32_t {
  None = 0,
  Bounded = 1u << 0,
  Divergent = 1u << 1,
  Degenerate = 1u << 2,
  Singular = 1u << 3,
  SkippedMass = 1u << 4,
  OutOfRegime = 1u << 5,
  ConstantsOnly = 1u << 6,
  ConditioningWarning = 1u << 7,
};

inline Flag operator|(Flag a, Flag b) {
  return static_cast<Flag>(static_cast<std::uint32_t>(a) | static_cast<std::uint32_t>(b));
}
inline Flag& operator|=(Flag& a, Flag b) { return a = a | b; }
inline bool has_flag(Flag set, Flag f) {
  return (static_cast<std::uint32_t>(set) & static_cast<std::uint32_t>(f)) != 0;
}

/// Flag names in a fixed order ("BOUNDED", "DIVERGENT", ...).
std::vector<std::string> flag_names(Flag set);

}  // namespace campanato
