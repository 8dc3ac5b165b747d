#pragma once

// Principal sl(2) inside sp(n, C) and its action on the Fock space through the
// metaplectic Lie algebra representation.

#include <string>
#include <vector>

#include "mpb/weyl.hpp"

namespace mpb {

class RadicalMatrix {
 public:
  RadicalMatrix() = default;
  RadicalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RadicalMatrix zero(std::size_t n) { return RadicalMatrix(n, n); }
  static RadicalMatrix diagonal(const std::vector<RadicalScalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RadicalScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RadicalScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RadicalMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend RadicalMatrix operator+(const RadicalMatrix& a, const RadicalMatrix& b);
  friend RadicalMatrix operator-(const RadicalMatrix& a, const RadicalMatrix& b);
  friend RadicalMatrix operator*(const RadicalMatrix& a, const RadicalMatrix& b);
  friend RadicalMatrix operator*(const RadicalScalar& s, const RadicalMatrix& a);
  friend bool operator==(const RadicalMatrix& a, const RadicalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RadicalScalar> data_;
};

RadicalMatrix matrix_commutator(const RadicalMatrix& a, const RadicalMatrix& b);

/// The 2n x 2n matrix [[A, B], [C, -A^t]] of sp(n, C); B and C symmetric.
struct SpElement {
  std::size_t n = 0;
  RadicalMatrix A, B, C;

  static SpElement zero(std::size_t n);
  RadicalMatrix full() const;
  /// Throws std::invalid_argument if the blocks are mis-sized or B, C are not symmetric.
  void validate() const;
  /// Inverse of full(); throws if the lower-right block is not -A^t.
  static SpElement from_full(const RadicalMatrix& m);
};

struct PrincipalTriple {
  std::size_t n = 0;
  SpElement H, Eplus, Eminus;
};

/// Image of the standard (h, e+, e-) under the (2n-1)-st symmetric power.
PrincipalTriple principal_sl2(std::size_t n);

struct Check {
  std::string id;
  std::string description;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool all_passed() const;
};

/// [H, E+-] = +-2 E+-, [E+, E-] = H and symmetry of the off-diagonal blocks.
VerificationReport verify_sl2_matrix(const PrincipalTriple& t);

/// Lie algebra action on the Fock space:
///   upper block B -> -(1/2)(B d, d),  lower block C -> (1/2)(C z, z),
///   Cartan block D -> -tr(D)/2 - d_{Dz}.
WeylOperator dLambda(const SpElement& x);

struct Sl2Operators {
  WeylOperator H, Eplus, Eminus;
};

/// dLambda of the principal triple for n = 2.
Sl2Operators sl2_operators();

/// Casimir 2 E+E- - H + H^2/2 for n = 2, normal ordered.
WeylOperator casimir_operator();

}  // namespace mpb
