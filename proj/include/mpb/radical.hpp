#pragma once

// Exact arithmetic in Q[sqrt(2), sqrt(3), sqrt(5), ...]: finite sums q_d * sqrt(d)
// with rational q_d and squarefree d >= 1.

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace mpb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Largest square divisor decomposition n = root^2 * core with core squarefree.
struct SquarefreeSplit {
  std::uint64_t root = 0;
  std::uint64_t core = 0;
};

SquarefreeSplit squarefree_split(std::uint64_t n);

class RadicalScalar {
 public:
  using TermMap = std::map<std::uint64_t, Rational>;

  RadicalScalar() = default;
  RadicalScalar(long value);  // NOLINT: implicit from integers is convenient in formulas
  RadicalScalar(int value) : RadicalScalar(static_cast<long>(value)) {}
  RadicalScalar(const Rational& value);  // NOLINT
  RadicalScalar(const Integer& value) : RadicalScalar(Rational(value)) {}

  /// q * sqrt(d); d need not be squarefree.
  static RadicalScalar radical(const Rational& q, std::uint64_t d);
  /// Parses "p/q" or "p".
  static RadicalScalar rational(const std::string& text);
  /// Builds from an arbitrary term map, canonicalizing keys and dropping zeros.
  static RadicalScalar from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Nonzero and of the form q * sqrt(d).
  bool is_monomial() const { return terms_.size() == 1; }
  /// Throws std::domain_error unless is_rational().
  Rational as_rational() const;
  Rational coefficient(std::uint64_t d) const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& rhs);
  RadicalScalar& operator-=(const RadicalScalar& rhs);
  RadicalScalar& operator*=(const RadicalScalar& rhs);
  /// Only defined for a rational or single-radical divisor; anything else
  /// throws std::domain_error, as does division by zero.
  RadicalScalar& operator/=(const RadicalScalar& rhs);

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator/(RadicalScalar a, const RadicalScalar& b) { return a /= b; }
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.terms_ == b.terms_; }

  /// Rounds the exact value to long double, evaluating at `bits` of working precision.
  long double to_long_double(int bits = 64) const;
  /// Decimal rendering with `digits` significant digits at `bits` working precision.
  std::string to_decimal(int digits = 20, int bits = 128) const;
  /// Human-readable form such as "-2/3 + 1/2*sqrt(3)".
  std::string to_string() const;

 private:
  void add_term(std::uint64_t d, const Rational& q);

  TermMap terms_;
};

RadicalScalar sqrt_int(std::uint64_t n);
RadicalScalar pow(const RadicalScalar& base, unsigned exponent);

/// "p/q" with the denominator always present, e.g. "3/1".
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& text);
Integer factorial(unsigned n);
/// Rising factorial (x)_m = x (x+1) ... (x+m-1).
Rational pochhammer(const Rational& x, unsigned m);

}  // namespace mpb
