#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "akm/errors.hpp"

namespace akm {

/// Exact arbitrary-precision rational scalar. Kept in lowest terms with a
/// positive denominator by the backend; all arithmetic is exact. Every
/// quantity in this library is a Rational; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical text form: "p/q" in lowest terms, "p" when q = 1, with the
/// sign (if any) on p.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Parses the canonical text form. Accepts "p", "-p", "p/q", "-p/q" with
/// q > 0; anything else (signs elsewhere, whitespace, empty fields, zero
/// denominator) is rejected.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&](const char* why) -> Rational {
    throw ParseError("invalid rational literal '" + std::string(text) + "': " + why);
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);

  const auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!all_digits(num)) return fail("numerator must be a decimal integer");

  BigInt p{std::string(num)};
  if (negative) p = -p;
  if (slash == std::string_view::npos) return Rational(p);

  if (!all_digits(den)) return fail("denominator must be a decimal integer");
  BigInt q{std::string(den)};
  if (q == 0) return fail("zero denominator");
  return Rational(p, q);
}

}  // namespace akm
