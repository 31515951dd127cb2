#include "flagspec/rational.hpp"

#include <cctype>
#include <climits>

#include "flagspec/error.hpp"

namespace flagspec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt decimal(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  auto s = trim(text);
  if (!is_decimal(s, true))
    throw Error(ErrorKind::invalid_argument, "not an integer: '" + std::string(text) + "'");
  return decimal(s);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  auto num = trim(s.substr(0, slash));
  auto den = trim(s.substr(slash + 1));
  if (!is_decimal(num, true) || !is_decimal(den, false))
    throw Error(ErrorKind::invalid_argument, "not a rational: '" + std::string(text) + "'");
  BigInt d = decimal(den);
  if (d == 0) throw Error(ErrorKind::invalid_argument, "zero denominator in '" + std::string(text) + "'");
  Rational r(decimal(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw Error(ErrorKind::invalid_argument, "expected a machine-size integer, got " + to_string(r));
  return r.get_num().get_si();
}

BigInt pow2(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace flagspec
