#pragma once

#include <compare>
#include <string>

#include "flagspec/rational.hpp"

namespace flagspec {

/// An exact rational times pi^k with k in {-1, 0, 1}.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(Rational value, int pi_power);

  const Rational& value() const { return value_; }
  int pi_power() const { return pi_power_; }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return sgn(value_); }

  PiScalar& operator+=(const PiScalar& o);
  PiScalar& operator-=(const PiScalar& o);
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator-(const PiScalar& a) { return PiScalar(-a.value_, a.pi_power_); }

  friend PiScalar operator*(const PiScalar& a, const PiScalar& b);
  friend PiScalar operator/(const PiScalar& a, const PiScalar& b);
  friend PiScalar operator*(const Rational& c, const PiScalar& a) { return PiScalar(c * a.value_, a.pi_power_); }

  /// Exact equality: same power and same rational. Zero compares equal to
  /// zero regardless of the power.
  friend bool operator==(const PiScalar& a, const PiScalar& b);
  /// Ordering between equal powers (or against zero); throws otherwise.
  friend std::strong_ordering operator<=>(const PiScalar& a, const PiScalar& b);

 private:
  Rational value_ = 0;
  int pi_power_ = 0;
};

/// "4", "4*pi", "1/2*pi^-1".
std::string to_string(const PiScalar& s);

/// Inverse of to_string; also accepts "pi", "-pi" and "p/q*pi".
PiScalar parse_pi_scalar(const std::string& text);

}  // namespace flagspec
