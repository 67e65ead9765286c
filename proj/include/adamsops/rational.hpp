#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adamsops {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator by the backend.
using BigRational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (expressions, literals, JSON sequences).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A requested series order, degree or index exceeds the configured capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain (truncation mismatch, p not an odd prime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const BigInt& z) { return z.str(); }

inline std::string to_string(const BigRational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  return den < 0 ? BigRational(-num, -den) : BigRational(num, den);
}

/// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
inline BigRational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) throw ParseError("expected integer, got '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("expected integer, got '" + std::string(s) + "'");
    }
    std::string digits(s.substr(start));
    BigInt value(digits);
    return s[0] == '-' ? BigInt(-value) : value;
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return BigRational(parse_int(text.substr(0, slash)), den);
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

/// k^m with the convention 0^0 = 1.
inline BigRational rpow(const BigRational& base, unsigned exp) {
  BigRational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw DomainError("p must be an odd prime, got " + std::to_string(p));
  }
}

/// p-adic valuation of a nonzero integer.
inline int valuation(BigInt z, std::int64_t p) {
  if (z == 0) throw DomainError("valuation of zero");
  int v = 0;
  while (z % p == 0) {
    z /= p;
    ++v;
  }
  return v;
}

/// p-adic valuation of a rational; std::nullopt stands for +infinity (q = 0).
inline std::optional<int> valuation(const BigRational& q, std::int64_t p) {
  if (q == 0) return std::nullopt;
  return valuation(numerator(q), p) - valuation(denominator(q), p);
}

inline bool is_p_integral(const BigRational& q, std::int64_t p) {
  return denominator(q) % p != 0;
}

using RationalVector = std::vector<BigRational>;
using RationalMatrix = std::vector<RationalVector>;

}  // namespace adamsops
