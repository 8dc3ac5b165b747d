#include "mpb/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mpb {

unsigned total_degree(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0U); }

Integer multi_factorial(const MultiIndex& alpha) {
  Integer out = 1;
  for (unsigned a : alpha) out *= factorial(a);
  return out;
}

FockPolynomial FockPolynomial::monomial(const MultiIndex& alpha, const RadicalScalar& coeff) {
  FockPolynomial p(alpha.size());
  p.add_term(alpha, coeff);
  return p;
}

FockPolynomial FockPolynomial::constant(std::size_t n, const RadicalScalar& value) {
  return monomial(MultiIndex(n, 0), value);
}

RadicalScalar FockPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RadicalScalar() : it->second;
}

void FockPolynomial::add_term(const MultiIndex& alpha, const RadicalScalar& coeff) {
  if (alpha.size() != n_) throw std::invalid_argument("multi-index length does not match variable count");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int FockPolynomial::degree() const {
  int out = -1;
  for (const auto& [alpha, c] : terms_) out = std::max(out, static_cast<int>(total_degree(alpha)));
  return out;
}

int FockPolynomial::low_degree() const {
  int out = -1;
  for (const auto& [alpha, c] : terms_) {
    const int d = static_cast<int>(total_degree(alpha));
    if (out < 0 || d < out) out = d;
  }
  return out;
}

FockPolynomial FockPolynomial::filter_degree(const std::function<bool(unsigned)>& keep) const {
  FockPolynomial out(n_);
  for (const auto& [alpha, c] : terms_) {
    if (keep(total_degree(alpha))) out.terms_.emplace(alpha, c);
  }
  return out;
}

FockPolynomial FockPolynomial::operator-() const {
  FockPolynomial out = *this;
  for (auto& [alpha, c] : out.terms_) c = -c;
  return out;
}

FockPolynomial& FockPolynomial::operator+=(const FockPolynomial& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("FockPolynomial variable count mismatch");
  for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, c);
  return *this;
}

FockPolynomial& FockPolynomial::operator-=(const FockPolynomial& rhs) { return *this += -rhs; }

FockPolynomial& FockPolynomial::operator*=(const RadicalScalar& scale) {
  if (scale.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scale;
  return *this;
}

FockPolynomial operator*(const FockPolynomial& a, const FockPolynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("FockPolynomial variable count mismatch");
  FockPolynomial out(a.n_);
  MultiIndex sum(a.n_);
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) {
      for (std::size_t j = 0; j < a.n_; ++j) sum[j] = alpha[j] + beta[j];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

std::complex<long double> FockPolynomial::evaluate(std::span<const std::complex<long double>> z) const {
  if (z.size() != n_) throw std::invalid_argument("evaluation point has wrong dimension");
  std::complex<long double> acc = 0;
  for (const auto& [alpha, c] : terms_) {
    std::complex<long double> term = c.to_long_double();
    for (std::size_t j = 0; j < n_; ++j) {
      for (unsigned e = 0; e < alpha[j]; ++e) term *= z[j];
    }
    acc += term;
  }
  return acc;
}

std::string FockPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] == 0) continue;
      os << "*z" << (j + 1);
      if (alpha[j] > 1) os << "^" << alpha[j];
    }
  }
  return os.str();
}

RadicalScalar inner_product(const FockPolynomial& p, const FockPolynomial& q) {
  if (p.variables() != q.variables()) throw std::invalid_argument("inner_product: variable count mismatch");
  RadicalScalar acc;
  const auto& small = p.terms().size() <= q.terms().size() ? p.terms() : q.terms();
  const auto& large = p.terms().size() <= q.terms().size() ? q.terms() : p.terms();
  for (const auto& [alpha, c] : small) {
    auto it = large.find(alpha);
    if (it == large.end()) continue;
    acc += c * it->second * RadicalScalar(Rational(multi_factorial(alpha)));
  }
  return acc;
}

Rational norm_closed_form(const NormFormulaInput& in) {
  const Rational mf(factorial(in.m));
  const Rational shift = in.variable == ExtraVariable::z1 ? Rational(in.m + 1) : Rational(3 * in.m + 1);
  return mf * mf * pochhammer(shift, in.k) * pochhammer(Rational(2, 3), in.m) * pochhammer(Rational(1, 3), in.m);
}

RadicalScalar invariant_coefficient() {
  // 1 / (3 sqrt 3) = sqrt(3) / 9
  return RadicalScalar::radical(Rational(1, 9), 3);
}

FockPolynomial monomial_expand_invariant(unsigned m, const MultiIndex& extra) {
  if (extra.size() != 2) throw std::invalid_argument("monomial_expand_invariant works on C^2");
  MultiIndex alpha{extra[0] + m, extra[1] + 3 * m};
  return FockPolynomial::monomial(alpha, pow(invariant_coefficient(), m));
}

}  // namespace mpb
