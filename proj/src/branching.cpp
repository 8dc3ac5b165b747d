#include "mpb/branching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace mpb {
namespace {

const Sl2Operators& ops() {
  static const Sl2Operators cached = sl2_operators();
  return cached;
}

// 1 / (Gamma(1/3) Gamma(2/3))
constexpr Real kReflection = 0.27566444771089600213L;  // sqrt(3) / (2 pi)

int floor_div3(int x) { return x >= 0 ? x / 3 : -((-x + 2) / 3); }

struct Pochhammer2 {
  Rational x, y;
};

std::optional<Pochhammer2> normalizer(int weight) {
  if (weight == -1) return Pochhammer2{Rational(1, 3), Rational(2, 3)};
  if (weight == 0) return Pochhammer2{Rational(2, 3), Rational(4, 3)};
  return std::nullopt;
}

WeylOperator tridiagonal_operator(int weight) {
  if (normalizer(weight)) return RadicalScalar(Rational(1, 9)) * compose(ops().Eplus, ops().Eminus);
  return casimir_operator();
}

// Right inverse of d1 d2 on monomials: z1^a z2^b -> z1^(a+1) z2^(b+1) / ((a+1)(b+1)).
FockPolynomial invert_mixed_partial(const FockPolynomial& p) {
  FockPolynomial out(2);
  for (const auto& [alpha, c] : p.terms()) {
    const MultiIndex up{alpha[0] + 1, alpha[1] + 1};
    out.add_term(up, c * RadicalScalar(Rational(1, static_cast<long>((alpha[0] + 1) * (alpha[1] + 1)))));
  }
  return out;
}

// t_{l+1} / t_l for t_l = (k!)^2 (1/3)_l (2/3)_l / (l! (k+l)!)
Real term_ratio(unsigned k, std::uint64_t l) {
  const Real x = static_cast<Real>(l);
  return (x + 1.0L / 3) * (x + 2.0L / 3) / ((x + 1) * (x + 1 + k));
}

Real log_tail_bound(unsigned k, Real L) {
  // K (k!)^2 L! / (k (L+k)!)
  return std::log(kReflection) + 2 * std::lgamma(static_cast<Real>(k) + 1) + std::lgamma(L + 1) -
         std::log(static_cast<Real>(k)) - std::lgamma(L + k + 1);
}

}  // namespace

std::optional<Rational> h_eigenvalue(const FockPolynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const FockPolynomial q = apply(ops().H, p);
  const auto& [alpha, c] = *p.terms().begin();
  const auto& [d, cd] = *c.terms().begin();
  const Rational lambda = q.coefficient(alpha).coefficient(d) / cd;
  if (!(q == p * RadicalScalar(lambda))) return std::nullopt;
  return lambda;
}

int monomial_weight(const MultiIndex& alpha) { return -1 - 3 * static_cast<int>(alpha[0]) + static_cast<int>(alpha[1]); }

WeightBasis weight_basis(int weight, unsigned m_max) {
  WeightBasis b;
  b.weight = weight;
  // weight = -3k + r with r in {-1, 0, 1}
  b.k = -floor_div3(weight + 1);
  b.residue = weight + 3 * b.k;
  if (b.k >= 0) {
    b.extra = {static_cast<unsigned>(b.k), static_cast<unsigned>(b.residue + 1)};
  } else {
    b.extra = {0u, static_cast<unsigned>(-3 * b.k + b.residue + 1)};
  }
  const auto norm = normalizer(weight);
  b.normalized = norm.has_value();
  for (unsigned m = 0; m <= m_max; ++m) {
    const Rational scale = norm ? Rational(1) / (pochhammer(norm->x, m) * pochhammer(norm->y, m)) : Rational(1);
    FockPolynomial w = monomial_expand_invariant(m, b.extra) * RadicalScalar(scale);
    b.scale.push_back(scale);
    b.norms.push_back(norm_squared(w).as_rational());
    b.entries.push_back(std::move(w));
  }
  return b;
}

CasimirTridiagonal casimir_tridiagonal(int weight, unsigned m_max) {
  const WeightBasis basis = weight_basis(weight, m_max + 1);
  const WeylOperator op = tridiagonal_operator(weight);
  CasimirTridiagonal out;
  out.weight = weight;
  out.kind = basis.normalized ? TridiagonalKind::ninth_raising_lowering : TridiagonalKind::casimir;
  out.norms = basis.norms;
  auto coefficient = [&](const FockPolynomial& v, unsigned j) {
    return (inner_product(v, basis.entries[j]) / RadicalScalar(basis.norms[j])).as_rational();
  };
  for (unsigned m = 0; m <= m_max; ++m) {
    const FockPolynomial v = apply(op, basis.entries[m]);
    CoefficientTriple t{m, coefficient(v, m + 1), coefficient(v, m), m > 0 ? coefficient(v, m - 1) : Rational(0)};
    FockPolynomial rest = v - basis.entries[m + 1] * RadicalScalar(t.alpha) - basis.entries[m] * RadicalScalar(t.beta);
    if (m > 0) rest -= basis.entries[m - 1] * RadicalScalar(t.gamma);
    if (!rest.is_zero()) {
      throw std::logic_error("operator is not tridiagonal on weight " + std::to_string(weight) + " at m = " +
                             std::to_string(m) + ": remainder " + rest.to_string());
    }
    out.triples.push_back(std::move(t));
  }
  return out;
}

bool MatchReport::matched() const {
  return std::all_of(entries.begin(), entries.end(), [](const MatchEntry& e) { return e.ok; });
}

std::optional<unsigned> MatchReport::first_mismatch() const {
  for (const auto& e : entries) {
    if (!e.ok) return e.m;
  }
  return std::nullopt;
}

MatchReport match_hahn_params(const CasimirTridiagonal& data, const HahnParams& candidate) {
  candidate.validate();
  if (data.kind != TridiagonalKind::ninth_raising_lowering) {
    throw std::invalid_argument("parameter matching needs the (1/9) E+E- data of weight -1 or 0");
  }
  MatchReport report;
  report.params = candidate;
  auto push = [&](unsigned m, const char* field, const Rational& expected, const Rational& actual) {
    report.entries.push_back({m, field, expected, actual, expected == actual});
  };
  const Rational shift = candidate.a * candidate.a - candidate.d / (candidate.s * candidate.s);
  for (const auto& t : data.triples) {
    const Rational A = hahn_A(candidate, t.m);
    const Rational C = hahn_C(candidate, t.m);
    push(t.m, "alpha", A, t.alpha);
    push(t.m, "beta", -(A + C - shift), t.beta);
    push(t.m, "gamma", C, t.gamma);
    push(t.m, "norm", hahn_norm(candidate, t.m), data.norms[t.m]);
  }
  return report;
}

Rational hwv_coefficient(unsigned k, unsigned l) { return Rational(factorial(k)) / Rational(factorial(l) * factorial(k + l)); }

HwvSeries solve_hwv(unsigned k, unsigned L) {
  HwvSeries s;
  s.k = k;
  s.L = L;
  const RadicalScalar sqrt3 = sqrt_int(3);
  const FockPolynomial z2sq = FockPolynomial::monomial({0, 2});
  const MultiIndex start{k, 0};
  s.terms.push_back(FockPolynomial::monomial(start));
  for (unsigned l = 0; l < L; ++l) {
    FockPolynomial next = invert_mixed_partial(z2sq * s.terms.back());
    next *= RadicalScalar(1L) / sqrt3;
    s.terms.push_back(std::move(next));
  }
  s.coefficients_match = true;
  s.truncation = FockPolynomial(2);
  for (unsigned l = 0; l <= L; ++l) {
    const FockPolynomial& f = s.terms[l];
    const MultiIndex alpha{k + l, 3 * l};
    const RadicalScalar c = f.coefficient(alpha) / pow(invariant_coefficient(), l);
    Rational a = c.is_rational() ? c.as_rational() : Rational(0);
    if (!c.is_rational() || f.terms().size() != 1 || a != hwv_coefficient(k, l)) s.coefficients_match = false;
    s.a.push_back(std::move(a));
    s.truncation += f;
  }
  s.residual = apply(ops().Eplus, s.truncation);
  s.residual_top_band = s.residual == z2sq * s.terms.back() && s.residual.degree() == static_cast<int>(k + 4 * L + 2);

  const Rational nu = 3 * k + 1;
  const Rational lambda = nu * nu / 2 - nu;
  s.casimir_defect = apply(casimir_operator(), s.truncation) - s.truncation * RadicalScalar(lambda);
  const int top = static_cast<int>(k + 4 * L);
  s.casimir_interior_clean = s.casimir_defect.low_degree() < 0 || s.casimir_defect.low_degree() >= top;
  return s;
}

std::string to_string(ConvergenceVerdict v) { return v == ConvergenceVerdict::convergent ? "convergent" : "divergent"; }

NormPartials hwv_norm_partials(unsigned k, unsigned L) {
  NormPartials out;
  out.k = k;
  out.L = L;
  Rational sum = 0;
  for (unsigned l = 0; l <= L; ++l) {
    const Rational a = hwv_coefficient(k, l);
    sum += a * a * norm_closed_form({l, k, ExtraVariable::z1});
    out.partial_sums.push_back(sum);
  }

  // Partial sums at M = 16, 32, ..., 2^15 in floating point.
  constexpr std::uint64_t first = 16;
  constexpr std::uint64_t last = std::uint64_t{1} << 15;
  std::vector<Real> at;  // S_M at M = first, 2 first, ...
  Real t = static_cast<Real>(factorial(k).get_d());  // t_0 = (k!)^2 / k!
  Real partial = 0;
  std::uint64_t next = first;
  for (std::uint64_t l = 0; l <= last; ++l) {
    partial += t;
    if (l == next) {
      at.push_back(partial);
      next *= 2;
    }
    t *= term_ratio(k, l);
  }
  for (std::size_t j = 0; j + 1 < at.size(); ++j) {
    const std::uint64_t M = first << j;
    out.doubling_points.push_back(M);
    out.doubling_values.push_back(at[j + 1] - at[j]);
  }
  // Increments that stay bounded below force divergence; for k >= 1 they decay like M^-k.
  const bool bounded_below = out.doubling_values.back() >= 0.5L * out.doubling_values.front();
  out.verdict = bounded_below ? ConvergenceVerdict::divergent : ConvergenceVerdict::convergent;
  if (k == 0) {
    // t_l > K / (l+1), so S_{2M} - S_M > K log((2M+2)/(M+2)).
    out.bound = kReflection * std::log(static_cast<Real>(2 * first + 2) / static_cast<Real>(first + 2));
  } else {
    // (1/3)_l (2/3)_l <= (l-1)! l! / (Gamma(1/3) Gamma(2/3)) bounds the tail past L by K (k!)^2 L! / (k (L+k)!).
    out.bound = std::exp(log_tail_bound(k, static_cast<Real>(L)));
  }
  return out;
}

Rational hwv_norm_partial_k1(unsigned L) {
  return pochhammer(Rational(5, 3), L) * pochhammer(Rational(4, 3), L) /
         (Rational(factorial(L)) * pochhammer(Rational(2), L));
}

NormEnclosure hwv_norm_enclosure(unsigned k, double width) {
  if (k == 0) throw std::invalid_argument("the k = 0 series diverges");
  if (!(width > 0)) throw std::invalid_argument("enclosure width must be positive");
  NormEnclosure out;
  out.k = k;
  std::uint64_t L = 1;
  while (log_tail_bound(k, static_cast<Real>(L)) > std::log(static_cast<Real>(width)) - 1e-3L) L *= 2;
  std::uint64_t lo = L / 2;
  while (lo + 1 < L) {
    const std::uint64_t mid = lo + (L - lo) / 2;
    if (log_tail_bound(k, static_cast<Real>(mid)) > std::log(static_cast<Real>(width)) - 1e-3L) {
      lo = mid;
    } else {
      L = mid;
    }
  }
  out.terms = L;
  using boost::math::lgamma;
  const HighReal third = HighReal(1) / 3;
  const HighReal kk = HighReal(k);
  const HighReal N = HighReal(L);
  const HighReal log_kfact = lgamma(kk + 1);
  if (k == 1) {
    // S_L = (5/3)_L (4/3)_L / (L! (2)_L)
    out.lower = exp(lgamma(N + 5 * third) + lgamma(N + 4 * third) - lgamma(5 * third) - lgamma(4 * third) -
                    lgamma(N + 1) - lgamma(N + 2));
  } else {
    HighReal t = exp(log_kfact);
    HighReal sum = 0;
    for (std::uint64_t l = 0; l <= L; ++l) {
      sum += t;
      const HighReal x = HighReal(l);
      t *= (x + third) * (x + 2 * third) / ((x + 1) * (x + 1 + kk));
    }
    out.lower = sum;
  }
  const HighReal K = sqrt(HighReal(3)) / (2 * boost::math::constants::pi<HighReal>());
  out.upper = out.lower + K * exp(2 * log_kfact + lgamma(N + 1) - lgamma(N + kk + 1)) / kk;
  return out;
}

bool admissible_lowest_term(const FockPolynomial& f0) {
  return apply(WeylOperator::term(RadicalScalar(1L), {0, 0}, {0, 2}), f0).is_zero();
}

LwsScanReport no_lws_scan(unsigned degree_bound) {
  LwsScanReport r;
  r.degree_bound = degree_bound;
  r.max_weight = std::numeric_limits<int>::min();
  // d2^2 sends distinct monomials to distinct monomials, so its kernel in each
  // degree is spanned by the monomials it kills.
  for (unsigned D = 0; D <= degree_bound; ++D) {
    for (unsigned a = 0; a <= D; ++a) {
      const FockPolynomial mono = FockPolynomial::monomial({a, D - a});
      if (!admissible_lowest_term(mono)) continue;
      const auto w = h_eigenvalue(mono);
      if (!w || w->get_den() != 1) throw std::logic_error("monomial is not an H eigenvector");
      const int weight = static_cast<int>(w->get_num().get_si());
      r.kernel.push_back({D, mono, weight});
      r.max_weight = std::max(r.max_weight, weight);
    }
  }
  r.no_lowest_weight = r.max_weight < 1;
  return r;
}

std::string to_string(ReprKind kind) {
  switch (kind) {
    case ReprKind::principal_even: return "principal-even";
    case ReprKind::principal_odd: return "principal-odd";
    case ReprKind::complementary: return "complementary";
    case ReprKind::highest_weight: return "highest-weight";
    case ReprKind::lowest_weight: return "lowest-weight";
  }
  return "unknown";
}

void ReprDescriptor::validate() const {
  switch (kind) {
    case ReprKind::principal_even:
    case ReprKind::principal_odd:
      if (parameter < 0) throw std::invalid_argument("principal series needs lambda >= 0");
      break;
    case ReprKind::complementary:
      if (parameter <= 0 || parameter >= Rational(1, 2)) throw std::invalid_argument("complementary series needs 0 < lambda < 1/2");
      break;
    case ReprKind::highest_weight:
    case ReprKind::lowest_weight:
      if (parameter < 1) throw std::invalid_argument("discrete series needs nu >= 1");
      break;
  }
}

int ReprDescriptor::extremal_weight() const {
  if (kind != ReprKind::highest_weight && kind != ReprKind::lowest_weight) {
    throw std::invalid_argument("only highest/lowest weight representations have an extremal weight");
  }
  if (parameter.get_den() != 1) throw std::invalid_argument("non-integral nu has no weight");
  const int nu = static_cast<int>(parameter.get_num().get_si());
  return kind == ReprKind::highest_weight ? -nu : nu;
}

std::vector<ReprDescriptor> discrete_components(Parity parity, unsigned k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  std::vector<ReprDescriptor> out;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (parity == Parity::even && k % 2 != 0) continue;
    if (parity == Parity::odd && k % 2 == 0) continue;
    out.push_back({ReprKind::highest_weight, Rational(3 * k + 1)});
  }
  return out;
}

Rational rep_casimir_eigenvalue(const ReprDescriptor& r) {
  r.validate();
  if (r.kind == ReprKind::highest_weight || r.kind == ReprKind::lowest_weight) {
    return r.parameter * r.parameter / 2 - r.parameter;
  }
  return Rational(-1, 2) - r.parameter * r.parameter;
}

std::complex<Real> generalized_eigenfunction(Real x, std::span<const std::complex<Real>> z, unsigned M, int weight) {
  const HahnParams p = params_for_weight(weight);
  const WeightBasis basis = weight_basis(weight, M);
  const Real s = rational_to<Real>(p.s);
  const Real y = (x / s) * (x / s);
  std::complex<Real> sum = 0;
  for (unsigned m = 0; m <= M; ++m) {
    const Real e_tilde = cdh_eval<Real>(m, y, p) / std::sqrt(rational_to<Real>(hahn_norm(p, m)));
    sum += basis.entries[m].evaluate(z) / std::sqrt(rational_to<Real>(basis.norms[m])) * e_tilde;
  }
  return sum;
}

std::vector<Real> eigenfunction_mode_residuals(Real x, unsigned M, int weight) {
  const HahnParams p = params_for_weight(weight);
  const CasimirTridiagonal data = casimir_tridiagonal(weight, M);
  const Real s = rational_to<Real>(p.s);
  const Real y = (x / s) * (x / s);
  const Real mu = weight;
  const Real kappa = -mu + mu * mu / 2;  // C = 18 (E+E-/9) + kappa on this weight
  const Real lambda = 2 * x * x + 0.5L;
  std::vector<Real> c(M + 1), n(M + 1), u(M + 1);
  for (unsigned m = 0; m <= M; ++m) {
    c[m] = cdh_eval<Real>(m, y, p) / std::sqrt(rational_to<Real>(hahn_norm(p, m)));
    n[m] = std::sqrt(rational_to<Real>(data.norms[m]));
    u[m] = c[m] / n[m];
  }
  std::vector<Real> residuals;
  for (unsigned j = 0; j < M; ++j) {
    Real w = rational_to<Real>(data.triples[j].beta) * u[j] + rational_to<Real>(data.triples[j + 1].gamma) * u[j + 1];
    if (j > 0) w += rational_to<Real>(data.triples[j - 1].alpha) * u[j - 1];
    const Real minus_c = (-18 * w - kappa * u[j]) * n[j];
    residuals.push_back(minus_c - lambda * c[j]);
  }
  return residuals;
}

}  // namespace mpb
