#include "mpb/metaplectic.hpp"

#include <stdexcept>

namespace mpb {
namespace {

void require_shape(const RadicalMatrix& a, const RadicalMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

std::string matrix_string(const RadicalMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += m(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Check matrix_check(std::string id, std::string description, const RadicalMatrix& expected, const RadicalMatrix& actual) {
  Check c{std::move(id), std::move(description), expected == actual, {}, {}};
  if (!c.passed) {
    c.expected = matrix_string(expected);
    c.actual = matrix_string(actual);
  }
  return c;
}

}  // namespace

RadicalMatrix RadicalMatrix::diagonal(const std::vector<RadicalScalar>& entries) {
  RadicalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RadicalMatrix RadicalMatrix::transpose() const {
  RadicalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool RadicalMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

bool RadicalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool RadicalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

RadicalMatrix operator+(const RadicalMatrix& a, const RadicalMatrix& b) {
  require_shape(a, b, "matrix +");
  RadicalMatrix out = a;
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RadicalMatrix operator-(const RadicalMatrix& a, const RadicalMatrix& b) {
  require_shape(a, b, "matrix -");
  RadicalMatrix out = a;
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RadicalMatrix operator*(const RadicalMatrix& a, const RadicalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  RadicalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RadicalMatrix operator*(const RadicalScalar& s, const RadicalMatrix& a) {
  RadicalMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

RadicalMatrix matrix_commutator(const RadicalMatrix& a, const RadicalMatrix& b) { return a * b - b * a; }

SpElement SpElement::zero(std::size_t n) { return {n, RadicalMatrix::zero(n), RadicalMatrix::zero(n), RadicalMatrix::zero(n)}; }

RadicalMatrix SpElement::full() const {
  RadicalMatrix m(2 * n, 2 * n);
  const RadicalMatrix At = A.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = A(i, j);
      m(i, n + j) = B(i, j);
      m(n + i, j) = C(i, j);
      m(n + i, n + j) = -At(i, j);
    }
  }
  return m;
}

void SpElement::validate() const {
  for (const RadicalMatrix* block : {&A, &B, &C}) {
    if (block->rows() != n || block->cols() != n) throw std::invalid_argument("SpElement block has wrong size");
  }
  if (!B.is_symmetric()) throw std::invalid_argument("SpElement upper block is not symmetric");
  if (!C.is_symmetric()) throw std::invalid_argument("SpElement lower block is not symmetric");
}

SpElement SpElement::from_full(const RadicalMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw std::invalid_argument("sp matrix must be 2n x 2n");
  const std::size_t n = m.rows() / 2;
  SpElement x = zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x.A(i, j) = m(i, j);
      x.B(i, j) = m(i, n + j);
      x.C(i, j) = m(n + i, j);
    }
  }
  if (!(x.full() == m)) throw std::invalid_argument("lower-right block is not -A^t");
  return x;
}

PrincipalTriple principal_sl2(std::size_t n) {
  if (n == 0) throw std::invalid_argument("principal_sl2 needs n >= 1");
  PrincipalTriple t{n, SpElement::zero(n), SpElement::zero(n), SpElement::zero(n)};
  const long nn = static_cast<long>(n);
  for (std::size_t j = 0; j < n; ++j) t.H.A(j, j) = RadicalScalar(2 * nn - 1 - 4 * static_cast<long>(j));
  for (long k = 1; k <= nn; ++k) {
    // b_{jk} = beta_k for j = n-k+1;  beta_k = sqrt((2k-1)(2(n-k)+1))
    t.Eplus.B(static_cast<std::size_t>(nn - k), static_cast<std::size_t>(k - 1)) =
        sqrt_int(static_cast<std::uint64_t>((2 * k - 1) * (2 * (nn - k) + 1)));
    if (k >= 2) {
      // c_{jk} = gamma_k for j = n-k+2;  gamma_k = 2 sqrt((k-1)(n-k+1))
      t.Eplus.C(static_cast<std::size_t>(nn - k + 1), static_cast<std::size_t>(k - 1)) =
          RadicalScalar::radical(2, static_cast<std::uint64_t>((k - 1) * (nn - k + 1)));
    }
  }
  t.Eminus = SpElement::from_full(t.Eplus.full().transpose());
  return t;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

VerificationReport verify_sl2_matrix(const PrincipalTriple& t) {
  const RadicalMatrix H = t.H.full();
  const RadicalMatrix Ep = t.Eplus.full();
  const RadicalMatrix Em = t.Eminus.full();
  const std::string tag = "n=" + std::to_string(t.n);
  VerificationReport report;
  report.checks.push_back(matrix_check("[H,E+]=2E+", tag, RadicalScalar(2L) * Ep, matrix_commutator(H, Ep)));
  report.checks.push_back(matrix_check("[H,E-]=-2E-", tag, RadicalScalar(-2L) * Em, matrix_commutator(H, Em)));
  report.checks.push_back(matrix_check("[E+,E-]=H", tag, H, matrix_commutator(Ep, Em)));
  const bool symmetric = t.Eplus.B.is_symmetric() && t.Eplus.C.is_symmetric() && t.Eminus.B.is_symmetric() &&
                         t.Eminus.C.is_symmetric() && t.H.B.is_zero() && t.H.C.is_zero() && t.H.A.is_diagonal();
  report.checks.push_back({"block-symmetry", tag, symmetric, "B = B^t, C = C^t, H Cartan", symmetric ? "" : "violated"});
  return report;
}

WeylOperator dLambda(const SpElement& x) {
  x.validate();
  const std::size_t n = x.n;
  WeylOperator op(n);
  const RadicalScalar half(Rational(1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const MultiIndex none(n, 0);
      MultiIndex pair(n, 0);
      ++pair[i];
      ++pair[j];
      if (!x.B(i, j).is_zero()) op.add_term(none, pair, -half * x.B(i, j));
      if (!x.C(i, j).is_zero()) op.add_term(pair, none, half * x.C(i, j));
      if (!x.A(i, j).is_zero()) {
        // d_{Dz} = sum_{i,j} D_ij z_j d_i
        MultiIndex z(n, 0), d(n, 0);
        z[j] = 1;
        d[i] = 1;
        op.add_term(z, d, -x.A(i, j));
      }
    }
    if (!x.A(i, i).is_zero()) op.add_term(MultiIndex(n, 0), MultiIndex(n, 0), -half * x.A(i, i));
  }
  return op;
}

Sl2Operators sl2_operators() {
  const PrincipalTriple t = principal_sl2(2);
  return {dLambda(t.H), dLambda(t.Eplus), dLambda(t.Eminus)};
}

WeylOperator casimir_operator() {
  const auto ops = sl2_operators();
  WeylOperator c = RadicalScalar(2L) * compose(ops.Eplus, ops.Eminus);
  c -= ops.H;
  c += RadicalScalar(Rational(1, 2)) * compose(ops.H, ops.H);
  return c;
}

}  // namespace mpb
