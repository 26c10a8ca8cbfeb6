#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace stareig {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. Values are always stored reduced, with a
// positive denominator, so == and < behave as expected and string output
// is canonical.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with an optional leading minus on p. The denominator
// must be a positive integer literal; anything else is rejected.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw std::invalid_argument("parse_rational: " + std::string(why) + ": \"" +
                                std::string(text) + "\"");
  };
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  auto is_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!is_integer(num, true)) fail("malformed numerator");
  if (slash != std::string_view::npos) {
    if (!is_integer(den, false)) fail("malformed denominator");
  }

  std::string num_s(num);
  BigInt p(num_s);
  BigInt q = 1;
  if (slash != std::string_view::npos) {
    std::string den_s(den);
    q = BigInt(den_s);
  }
  if (q == 0) fail("zero denominator");
  Rational r(p);
  r /= q;
  return r;
}

// Canonical form: "p" for integers, "p/q" otherwise (q > 0).
inline std::string to_string(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace stareig
