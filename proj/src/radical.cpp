#include "mpb/radical.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

namespace mpb {

SquarefreeSplit squarefree_split(std::uint64_t n) {
  if (n == 0) return {0, 0};
  std::uint64_t root = 1;
  std::uint64_t core = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= n;  // leftover prime factor (or 1)
  return {root, core};
}

RadicalScalar::RadicalScalar(long value) {
  if (value != 0) terms_.emplace(1, Rational(value));
}

RadicalScalar::RadicalScalar(const Rational& value) {
  if (value != 0) {
    Rational q = value;
    q.canonicalize();
    terms_.emplace(1, q);
  }
}

RadicalScalar RadicalScalar::radical(const Rational& q, std::uint64_t d) {
  RadicalScalar out;
  out.add_term(d, q);
  return out;
}

RadicalScalar RadicalScalar::rational(const std::string& text) { return RadicalScalar(parse_rational(text)); }

RadicalScalar RadicalScalar::from_terms(const TermMap& terms) {
  RadicalScalar out;
  for (const auto& [d, q] : terms) out.add_term(d, q);
  return out;
}

void RadicalScalar::add_term(std::uint64_t d, const Rational& q) {
  if (q == 0 || d == 0) return;
  const auto split = squarefree_split(d);
  Rational scaled = q * Rational(Integer(static_cast<unsigned long>(split.root)));
  scaled.canonicalize();
  auto [it, inserted] = terms_.try_emplace(split.core, scaled);
  if (!inserted) {
    it->second += scaled;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RadicalScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalScalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("RadicalScalar is not rational: " + to_string());
  return coefficient(1);
}

Rational RadicalScalar::coefficient(std::uint64_t d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& [d, q] : out.terms_) q = -q;
  return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& rhs) {
  for (const auto& [d, q] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(d, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& rhs) { return *this += -rhs; }

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar out;
  for (const auto& [d1, q1] : a.terms_) {
    for (const auto& [d2, q2] : b.terms_) {
      // d1, d2 squarefree: sqrt(d1) sqrt(d2) = g sqrt((d1/g)(d2/g)), g = gcd
      const std::uint64_t g = std::gcd(d1, d2);
      const std::uint64_t core = (d1 / g) * (d2 / g);
      Rational q = q1 * q2 * Rational(Integer(static_cast<unsigned long>(g)));
      auto [it, inserted] = out.terms_.try_emplace(core, q);
      if (!inserted) {
        it->second += q;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& rhs) { return *this = *this * rhs; }

RadicalScalar& RadicalScalar::operator/=(const RadicalScalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("RadicalScalar division by zero");
  if (!rhs.is_monomial()) {
    throw std::domain_error("RadicalScalar division only by rationals or single radicals, got " + rhs.to_string());
  }
  // x / (q sqrt(d)) = x sqrt(d) / (q d)
  const auto& [d, q] = *rhs.terms_.begin();
  Rational inv = 1 / (q * Rational(Integer(static_cast<unsigned long>(d))));
  return *this *= RadicalScalar::radical(inv, d);
}

long double RadicalScalar::to_long_double(int bits) const {
  mpfr_t acc, term;
  mpfr_init2(acc, bits);
  mpfr_init2(term, bits);
  mpfr_set_zero(acc, 1);
  for (const auto& [d, q] : terms_) {
    mpfr_set_ui(term, static_cast<unsigned long>(d), MPFR_RNDN);
    mpfr_sqrt(term, term, MPFR_RNDN);
    mpfr_mul_q(term, term, q.get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  const long double out = mpfr_get_ld(acc, MPFR_RNDN);
  mpfr_clear(term);
  mpfr_clear(acc);
  return out;
}

std::string RadicalScalar::to_decimal(int digits, int bits) const {
  mpfr_t acc, term;
  mpfr_init2(acc, bits);
  mpfr_init2(term, bits);
  mpfr_set_zero(acc, 1);
  for (const auto& [d, q] : terms_) {
    mpfr_set_ui(term, static_cast<unsigned long>(d), MPFR_RNDN);
    mpfr_sqrt(term, term, MPFR_RNDN);
    mpfr_mul_q(term, term, q.get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, acc);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(term);
  mpfr_clear(acc);
  return out;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_string(q);
    if (d != 1) os << "*sqrt(" << d << ")";
  }
  return os.str();
}

RadicalScalar sqrt_int(std::uint64_t n) { return RadicalScalar::radical(Rational(1), n); }

RadicalScalar pow(const RadicalScalar& base, unsigned exponent) {
  RadicalScalar result(1L);
  RadicalScalar b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational pochhammer(const Rational& x, unsigned m) {
  Rational out(1);
  for (unsigned i = 0; i < m; ++i) out *= x + i;
  return out;
}

}  // namespace mpb
