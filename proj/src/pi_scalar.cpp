#include "flagspec/pi_scalar.hpp"

#include <algorithm>

#include "flagspec/error.hpp"

namespace flagspec {

namespace {

int checked_power(int p) {
  if (p < -1 || p > 1)
    throw Error(ErrorKind::unit_mismatch, "pi power " + std::to_string(p) + " outside {-1, 0, 1}");
  return p;
}

void require_same_power(const PiScalar& a, const PiScalar& b) {
  if (a.pi_power() != b.pi_power() && !a.is_zero() && !b.is_zero())
    throw Error(ErrorKind::unit_mismatch, "cannot combine " + to_string(a) + " and " + to_string(b));
}

}  // namespace

PiScalar::PiScalar(Rational value, int pi_power) : value_(std::move(value)) {
  value_.canonicalize();
  pi_power_ = value_ == 0 ? std::clamp(pi_power, -1, 1) : checked_power(pi_power);
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
  require_same_power(*this, o);
  if (is_zero()) pi_power_ = o.pi_power_;
  value_ += o.value_;
  return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) { return *this += -o; }

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
  return PiScalar(a.value_ * b.value_, a.pi_power_ + b.pi_power_);
}

PiScalar operator/(const PiScalar& a, const PiScalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
  return PiScalar(a.value_ / b.value_, a.pi_power_ - b.pi_power_);
}

bool operator==(const PiScalar& a, const PiScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.value_ == b.value_;
  return a.pi_power_ == b.pi_power_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const PiScalar& a, const PiScalar& b) {
  require_same_power(a, b);
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const PiScalar& s) {
  std::string v = to_string(s.value());
  switch (s.pi_power()) {
    case 1: return v + "*pi";
    case -1: return v + "*pi^-1";
    default: return v;
  }
}

PiScalar parse_pi_scalar(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  auto ends_with = [&](const std::string& suffix) {
    return t.size() >= suffix.size() && t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  int power = 0;
  if (ends_with("pi^-1")) {
    power = -1;
    t.resize(t.size() - 5);
  } else if (ends_with("pi")) {
    power = 1;
    t.resize(t.size() - 2);
  }
  if (power != 0) {
    if (!t.empty() && t.back() == '*') t.pop_back();
    if (t.empty() || t == "+") t = "1";
    if (t == "-") t = "-1";
  }
  return PiScalar(parse_rational(t), power);
}

}  // namespace flagspec
