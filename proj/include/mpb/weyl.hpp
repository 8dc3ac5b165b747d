#pragma once

// Differential operators with polynomial coefficients, stored in normal order
// (all multiplications to the left of all derivatives):  sum c * z^a d^b.

#include <map>
#include <string>
#include <utility>

#include "mpb/fock.hpp"

namespace mpb {

class WeylOperator {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;  // (z-exponents, derivative orders)
  using TermMap = std::map<Key, RadicalScalar>;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t n) : n_(n) {}

  static WeylOperator identity(std::size_t n, const RadicalScalar& scale = RadicalScalar(1L));
  static WeylOperator term(const RadicalScalar& coeff, const MultiIndex& z, const MultiIndex& d);
  /// Multiplication by z_j (0-based).
  static WeylOperator coordinate(std::size_t n, std::size_t j);
  /// Partial derivative in z_j (0-based).
  static WeylOperator partial(std::size_t n, std::size_t j);

  std::size_t variables() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RadicalScalar coefficient(const MultiIndex& z, const MultiIndex& d) const;

  void add_term(const MultiIndex& z, const MultiIndex& d, const RadicalScalar& coeff);

  /// Highest total degree of the multiplication part; -1 when zero.
  int z_degree() const { return z_degree_; }
  /// Highest total order of the derivative part; -1 when zero.
  int d_degree() const { return d_degree_; }

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& rhs);
  WeylOperator& operator-=(const WeylOperator& rhs);
  WeylOperator& operator*=(const RadicalScalar& s);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const RadicalScalar& s) { return a *= s; }
  friend WeylOperator operator*(const RadicalScalar& s, WeylOperator a) { return a *= s; }
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void refresh_degrees();

  std::size_t n_ = 0;
  TermMap terms_;
  int z_degree_ = -1;
  int d_degree_ = -1;
};

FockPolynomial apply(const WeylOperator& op, const FockPolynomial& p);
/// Normal-ordered product a o b (apply b first).
WeylOperator compose(const WeylOperator& a, const WeylOperator& b);
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);
/// Fock-space adjoint: c z^a d^b  ->  c z^b d^a.
WeylOperator formal_adjoint(const WeylOperator& op);

}  // namespace mpb
