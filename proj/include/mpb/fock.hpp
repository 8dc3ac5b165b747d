#pragma once

// Polynomials on C^n inside the Fock space, in rescaled variables where the
// monomials are orthogonal with <z^a, z^a> = a_1! ... a_n!.

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "mpb/radical.hpp"

namespace mpb {

using MultiIndex = std::vector<unsigned>;

unsigned total_degree(const MultiIndex& alpha);
/// alpha_1! ... alpha_n!
Integer multi_factorial(const MultiIndex& alpha);

class FockPolynomial {
 public:
  using TermMap = std::map<MultiIndex, RadicalScalar>;

  FockPolynomial() = default;
  explicit FockPolynomial(std::size_t n) : n_(n) {}

  static FockPolynomial monomial(const MultiIndex& alpha, const RadicalScalar& coeff = RadicalScalar(1L));
  static FockPolynomial constant(std::size_t n, const RadicalScalar& value);

  std::size_t variables() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RadicalScalar coefficient(const MultiIndex& alpha) const;

  /// Adds c * z^alpha, dropping the term if it cancels.
  void add_term(const MultiIndex& alpha, const RadicalScalar& coeff);

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  /// Minimum total degree; -1 for the zero polynomial.
  int low_degree() const;
  /// Terms whose total degree satisfies `keep`.
  FockPolynomial filter_degree(const std::function<bool(unsigned)>& keep) const;

  FockPolynomial operator-() const;
  FockPolynomial& operator+=(const FockPolynomial& rhs);
  FockPolynomial& operator-=(const FockPolynomial& rhs);
  FockPolynomial& operator*=(const RadicalScalar& scale);
  friend FockPolynomial operator+(FockPolynomial a, const FockPolynomial& b) { return a += b; }
  friend FockPolynomial operator-(FockPolynomial a, const FockPolynomial& b) { return a -= b; }
  friend FockPolynomial operator*(FockPolynomial a, const RadicalScalar& s) { return a *= s; }
  friend FockPolynomial operator*(const RadicalScalar& s, FockPolynomial a) { return a *= s; }
  friend FockPolynomial operator*(const FockPolynomial& a, const FockPolynomial& b);
  friend bool operator==(const FockPolynomial& a, const FockPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Numeric evaluation at a point of C^n.
  std::complex<long double> evaluate(std::span<const std::complex<long double>> z) const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

/// Exact Fock pairing; all scalars are real so conjugation is the identity.
/// Throws std::invalid_argument on mismatched variable counts.
RadicalScalar inner_product(const FockPolynomial& p, const FockPolynomial& q);
inline RadicalScalar norm_squared(const FockPolynomial& p) { return inner_product(p, p); }

enum class ExtraVariable { z1, z2 };

struct NormFormulaInput {
  unsigned m = 0;
  unsigned k = 0;
  ExtraVariable variable = ExtraVariable::z1;
};

/// Closed-form ||I^m z_j^k||^2 for n = 2:
///   z1: (m!)^2 (m+1)_k (2/3)_m (1/3)_m,   z2: (m!)^2 (3m+1)_k (2/3)_m (1/3)_m.
Rational norm_closed_form(const NormFormulaInput& in);

/// Coefficient of the U(1)-invariant I = z1 z2^3 / (3 sqrt 3).
RadicalScalar invariant_coefficient();
/// I^m * z^extra as a single monomial (n = 2).
FockPolynomial monomial_expand_invariant(unsigned m, const MultiIndex& extra);

}  // namespace mpb
