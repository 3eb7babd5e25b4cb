#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyhom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Every numeric value printed by this library is an exact fraction "a/b",
// never a decimal, and the denominator is always written out ("1/1").
inline std::string to_fraction(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline BigInt as_integer(const Rational& q) {
  if (!is_integer(q)) throw Error("expected an integer, got " + to_fraction(q));
  return numerator(q);
}

inline Rational parse_fraction(std::string_view text) {
  auto bad = [&] { throw Error("bad fraction '" + std::string(text) + "'"); };
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  if (num.empty() || den.empty()) bad();
  try {
    BigInt n(num), d(den);
    if (d == 0) bad();
    return Rational(n, d);
  } catch (const std::exception&) {
    bad();
  }
  return Rational();  // unreachable
}

// p^e for integer e of either sign.
inline Rational rational_pow(int base, int exp) {
  BigInt b = 1;
  for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) b *= base;
  return exp < 0 ? Rational(1, b) : Rational(b);
}

// If q == p^e returns e, otherwise throws.
inline int power_exponent(const Rational& q, int p) {
  if (q <= 0) throw Error(to_fraction(q) + " is not a power of " + std::to_string(p));
  BigInt n = numerator(q), d = denominator(q);
  int e = 0;
  while (d > 1) {
    if (d % p != 0) throw Error(to_fraction(q) + " is not a power of " + std::to_string(p));
    d /= p;
    --e;
  }
  while (n > 1) {
    if (n % p != 0) throw Error(to_fraction(q) + " is not a power of " + std::to_string(p));
    n /= p;
    ++e;
  }
  if (n != 1) throw Error(to_fraction(q) + " is not a power of " + std::to_string(p));
  return e;
}

}  // namespace polyhom
