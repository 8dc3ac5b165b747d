#include "mpb/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mpb {
namespace {

void require_same_n(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": variable count mismatch");
}

// n! / (n-k)!
Integer falling(unsigned n, unsigned k) {
  Integer out = 1;
  for (unsigned i = 0; i < k; ++i) out *= n - i;
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

WeylOperator WeylOperator::identity(std::size_t n, const RadicalScalar& scale) {
  return term(scale, MultiIndex(n, 0), MultiIndex(n, 0));
}

WeylOperator WeylOperator::term(const RadicalScalar& coeff, const MultiIndex& z, const MultiIndex& d) {
  require_same_n(z.size(), d.size(), "WeylOperator::term");
  WeylOperator op(z.size());
  op.add_term(z, d, coeff);
  return op;
}

WeylOperator WeylOperator::coordinate(std::size_t n, std::size_t j) {
  MultiIndex z(n, 0);
  z.at(j) = 1;
  return term(RadicalScalar(1L), z, MultiIndex(n, 0));
}

WeylOperator WeylOperator::partial(std::size_t n, std::size_t j) {
  MultiIndex d(n, 0);
  d.at(j) = 1;
  return term(RadicalScalar(1L), MultiIndex(n, 0), d);
}

RadicalScalar WeylOperator::coefficient(const MultiIndex& z, const MultiIndex& d) const {
  auto it = terms_.find({z, d});
  return it == terms_.end() ? RadicalScalar() : it->second;
}

void WeylOperator::add_term(const MultiIndex& z, const MultiIndex& d, const RadicalScalar& coeff) {
  if (z.size() != n_ || d.size() != n_) throw std::invalid_argument("WeylOperator term has wrong arity");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{z, d}, coeff);
  if (inserted) {
    z_degree_ = std::max(z_degree_, static_cast<int>(total_degree(z)));
    d_degree_ = std::max(d_degree_, static_cast<int>(total_degree(d)));
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) {
    terms_.erase(it);
    refresh_degrees();
  }
}

void WeylOperator::refresh_degrees() {
  z_degree_ = -1;
  d_degree_ = -1;
  for (const auto& [key, c] : terms_) {
    z_degree_ = std::max(z_degree_, static_cast<int>(total_degree(key.first)));
    d_degree_ = std::max(d_degree_, static_cast<int>(total_degree(key.second)));
  }
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& rhs) {
  require_same_n(n_, rhs.n_, "WeylOperator::operator+=");
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& rhs) { return *this += -rhs; }

WeylOperator& WeylOperator::operator*=(const RadicalScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    refresh_degrees();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

std::string WeylOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t j = 0; j < n_; ++j) {
      if (key.first[j] == 0) continue;
      os << "*z" << (j + 1);
      if (key.first[j] > 1) os << "^" << key.first[j];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (key.second[j] == 0) continue;
      os << "*d" << (j + 1);
      if (key.second[j] > 1) os << "^" << key.second[j];
    }
  }
  return os.str();
}

FockPolynomial apply(const WeylOperator& op, const FockPolynomial& p) {
  require_same_n(op.variables(), p.variables(), "apply");
  const std::size_t n = p.variables();
  FockPolynomial out(n);
  MultiIndex target(n);
  for (const auto& [key, c] : op.terms()) {
    const auto& [z, d] = key;
    for (const auto& [gamma, cp] : p.terms()) {
      Integer scale = 1;
      bool killed = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (gamma[j] < d[j]) {
          killed = true;
          break;
        }
        scale *= falling(gamma[j], d[j]);
        target[j] = gamma[j] - d[j] + z[j];
      }
      if (killed) continue;
      out.add_term(target, c * cp * RadicalScalar(Rational(scale)));
    }
  }
  return out;
}

WeylOperator compose(const WeylOperator& a, const WeylOperator& b) {
  require_same_n(a.variables(), b.variables(), "compose");
  const std::size_t n = a.variables();
  WeylOperator out(n);
  MultiIndex z(n), d(n), t(n);
  for (const auto& [ka, ca] : a.terms()) {
    const auto& [alpha, beta] = ka;
    for (const auto& [kb, cb] : b.terms()) {
      const auto& [gamma, delta] = kb;
      // z^alpha (d^beta z^gamma) d^delta with
      // d^beta z^gamma = prod_j sum_t C(beta_j, t) gamma_j!/(gamma_j - t)! z_j^(gamma_j - t) d_j^(beta_j - t)
      const RadicalScalar base = ca * cb;
      std::fill(t.begin(), t.end(), 0U);
      while (true) {
        Integer scale = 1;
        for (std::size_t j = 0; j < n; ++j) {
          scale *= binomial(beta[j], t[j]) * falling(gamma[j], t[j]);
          z[j] = alpha[j] + gamma[j] - t[j];
          d[j] = beta[j] - t[j] + delta[j];
        }
        out.add_term(z, d, base * RadicalScalar(Rational(scale)));
        // odometer over 0 <= t_j <= min(beta_j, gamma_j)
        std::size_t j = 0;
        for (; j < n; ++j) {
          if (t[j] < std::min(beta[j], gamma[j])) {
            ++t[j];
            break;
          }
          t[j] = 0;
        }
        if (j == n) break;
      }
    }
  }
  return out;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return compose(a, b) - compose(b, a); }

WeylOperator formal_adjoint(const WeylOperator& op) {
  WeylOperator out(op.variables());
  for (const auto& [key, c] : op.terms()) out.add_term(key.second, key.first, c);
  return out;
}

}  // namespace mpb
