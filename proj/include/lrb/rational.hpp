#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "lrb/error.hpp"

namespace lrb {

// Arbitrary-precision exact scalars. cpp_rational keeps values in lowest
// terms with a positive denominator; zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Safe construction from signed parts (the cpp_rational two-argument
// constructor rejects negative denominators outright).
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// Canonical text form: "p/q" in lowest terms, plain "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p" or "p/q" with optional leading '-' on either part.
inline Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return ParseError("malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) throw bad();
      return Rational(Integer(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    return make_rational(Integer(std::string(num)), Integer(std::string(den)));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

}  // namespace lrb
