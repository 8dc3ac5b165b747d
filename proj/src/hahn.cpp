#include "mpb/hahn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace mpb {
namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr int kGaussPoints = 20;

struct GaussLegendre {
  std::array<Real, kGaussPoints> nodes{};
  std::array<Real, kGaussPoints> weights{};

  GaussLegendre() {
    // Newton on P_n from the Chebyshev initial guess
    for (int i = 0; i < kGaussPoints; ++i) {
      Real x = std::cos(kPi * (i + 0.75L) / (kGaussPoints + 0.5L));
      Real dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        Real p0 = 1, p1 = x;
        for (int k = 2; k <= kGaussPoints; ++k) {
          const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kGaussPoints * (x * p1 - p0) / (x * x - 1);
        const Real dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-19L) break;
      }
      nodes[i] = x;
      weights[i] = 2 / ((1 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

Real gauss_panel(const std::function<Real(Real)>& f, Real lo, Real hi) {
  const auto& rule = gauss_legendre();
  const Real half = (hi - lo) / 2;
  const Real mid = (hi + lo) / 2;
  Real acc = 0;
  for (int i = 0; i < kGaussPoints; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

Real to_real(const Rational& q) { return rational_to<Real>(q); }

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  if (workers == 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t stop = std::min(count, start + chunk);
    jobs.push_back(std::async(std::launch::async, [&fn, start, stop] {
      for (std::size_t i = start; i < stop; ++i) fn(i);
    }));
  }
  for (auto& job : jobs) job.get();
}

}  // namespace

void HahnParams::validate() const {
  if (a < 0 || b <= 0 || c <= 0 || s <= 0) {
    throw std::invalid_argument("Hahn parameters need a >= 0, b > 0, c > 0, s > 0: " + to_string());
  }
}

std::string HahnParams::to_string() const {
  return "(a=" + rational_string(a) + ", b=" + rational_string(b) + ", c=" + rational_string(c) +
         ", d=" + rational_string(d) + ", s=" + rational_string(s) + ")";
}

HahnParams odd_weight_params() { return {Rational(0), Rational(1, 3), Rational(2, 3), Rational(1), Rational(3)}; }

HahnParams even_weight_params() {
  return {Rational(1, 2), Rational(1, 6), Rational(5, 6), Rational(1, 4), Rational(3)};
}

Rational hahn_A(const HahnParams& p, unsigned m) { return (m + p.a + p.b) * (m + p.a + p.c); }

Rational hahn_C(const HahnParams& p, unsigned m) { return m * (m + p.b + p.c - 1); }

Rational hahn_norm(const HahnParams& p, unsigned m) {
  Rational out = Rational(factorial(m)) * pochhammer(p.b + p.c, m) / (pochhammer(p.a + p.b, m) * pochhammer(p.a + p.c, m));
  out.canonicalize();
  return out;
}

Real log_abs_gamma(std::complex<Real> z) {
  // B_2k / (2k (2k-1)), k = 1..10
  static constexpr std::array<Real, 10> stirling = {
      1.0L / 12,          -1.0L / 360,          1.0L / 1260,          -1.0L / 1680,         1.0L / 1188,
      -691.0L / 360360,   1.0L / 156,           -3617.0L / 122400,    43867.0L / 244188,    -174611.0L / 125400};
  if (z.real() <= 0) throw std::domain_error("log_abs_gamma needs Re z > 0");
  Real shift = 0;
  while (std::abs(z) < 16) {
    shift += std::log(std::abs(z));
    z += 1;
  }
  const std::complex<Real> inv = 1.0L / z;
  const std::complex<Real> inv2 = inv * inv;
  std::complex<Real> power = inv;
  Real tail = 0;
  for (Real c : stirling) {
    tail += c * power.real();
    power *= inv2;
  }
  const Real main = ((z - 0.5L) * std::log(z) - z).real() + 0.5L * std::log(2 * kPi);
  return main + tail - shift;
}

Real measure_density(Real x, const HahnParams& p) {
  p.validate();
  if (x < 0) throw std::domain_error("measure_density needs x >= 0");
  const Real a = to_real(p.a), b = to_real(p.b), c = to_real(p.c);
  const Real norm = std::lgamma(a + b) + std::lgamma(a + c) + std::lgamma(b + c) + std::log(2 * kPi);
  const std::complex<Real> ix(0, x);
  // |Gamma(a+ix)/Gamma(2ix)|^2 = 4 x^2 |Gamma(a+ix)|^2 / |Gamma(1+2ix)|^2; for a = 0 the
  // x^2 cancels against |Gamma(ix)|^2 = |Gamma(1+ix)|^2 / x^2.
  Real log_ratio;
  if (p.a == 0) {
    log_ratio = std::log(4.0L) + 2 * log_abs_gamma(1.0L + ix) - 2 * log_abs_gamma(1.0L + 2.0L * ix);
  } else {
    if (x == 0) return 0;
    log_ratio = std::log(4 * x * x) + 2 * log_abs_gamma(a + ix) - 2 * log_abs_gamma(1.0L + 2.0L * ix);
  }
  const Real log_density = log_ratio + 2 * log_abs_gamma(b + ix) + 2 * log_abs_gamma(c + ix) - norm;
  return std::exp(log_density);
}

Real integrate(const std::function<Real(Real)>& f, Real lo, Real hi, Real abs_tol, Real rel_tol) {
  if (!(hi > lo)) return 0;
  constexpr int kMaxDepth = 48;
  struct Panel {
    Real lo, hi, whole;
    int depth;
  };
  const int initial = std::max(1, static_cast<int>(std::ceil(hi - lo)));
  std::vector<Panel> stack;
  for (int i = initial - 1; i >= 0; --i) {
    const Real a = lo + (hi - lo) * i / initial;
    const Real b = i + 1 == initial ? hi : lo + (hi - lo) * (i + 1) / initial;
    stack.push_back({a, b, gauss_panel(f, a, b), 0});
  }
  // First pass estimates the magnitude for the relative criterion.
  Real scale = 0;
  for (const auto& panel : stack) scale += std::fabs(panel.whole);
  const Real target = std::max(abs_tol, rel_tol * scale);
  Real total = 0;
  while (!stack.empty()) {
    const Panel panel = stack.back();
    stack.pop_back();
    const Real mid = (panel.lo + panel.hi) / 2;
    const Real left = gauss_panel(f, panel.lo, mid);
    const Real right = gauss_panel(f, mid, panel.hi);
    const Real local = target * (panel.hi - panel.lo) / (hi - lo);
    if (std::fabs(left + right - panel.whole) <= local) {
      total += left + right;
      continue;
    }
    if (panel.depth >= kMaxDepth) throw std::runtime_error("quadrature did not converge");
    stack.push_back({mid, panel.hi, right, panel.depth + 1});
    stack.push_back({panel.lo, mid, left, panel.depth + 1});
  }
  return total;
}

Real integration_cutoff(const HahnParams& p, unsigned degree_m, unsigned degree_l, Real tail_tol) {
  // For large x the integrand behaves like x^power e^{-pi x}.
  const Real power = 2 * to_real(p.a + p.b + p.c) - 2 + 2 * static_cast<Real>(degree_m + degree_l);
  for (Real cutoff = 60;; cutoff += 10) {
    const Real rate = kPi - power / cutoff;
    if (rate <= kPi / 4) continue;
    const Real y = cutoff * cutoff;
    const Real value = measure_density(cutoff, p) * std::fabs(cdh_eval<Real>(degree_m, y, p) * cdh_eval<Real>(degree_l, y, p));
    if (value / rate < tail_tol) return cutoff;
    if (cutoff > 5000) throw std::runtime_error("integration_cutoff: tail does not decay");
  }
}

QuadratureResult quadrature_orthogonality(unsigned m, unsigned l, const HahnParams& p) {
  p.validate();
  QuadratureResult out;
  out.cutoff = integration_cutoff(p, m, l);
  const Real hm = to_real(hahn_norm(p, m));
  const Real hl = to_real(hahn_norm(p, l));
  out.expected = m == l ? hm : 0;
  auto integrand = [&](Real x) {
    const Real y = x * x;
    return cdh_eval<Real>(m, y, p) * cdh_eval<Real>(l, y, p) * measure_density(x, p);
  };
  const Real scale = std::sqrt(hm * hl);
  out.value = integrate(integrand, 0, out.cutoff, 1e-14L * scale, 1e-14L);
  out.relative_error = std::fabs(out.value - out.expected) / std::max(std::fabs(out.expected), scale);
  return out;
}

QuadratureResult quadrature_mass(const HahnParams& p) { return quadrature_orthogonality(0, 0, p); }

std::vector<Real> measure_cdf(const HahnParams& p, const std::vector<Real>& xs) {
  p.validate();
  const Real cutoff = integration_cutoff(p, 0, 0);
  auto density = [&](Real x) { return measure_density(x, p); };
  std::vector<Real> out;
  out.reserve(xs.size());
  Real acc = 0;
  Real last = 0;
  for (Real x : xs) {
    const Real clipped = std::clamp(x, Real(0), cutoff);
    if (clipped < last) throw std::invalid_argument("measure_cdf needs ascending abscissae");
    acc += integrate(density, last, clipped, 1e-16L, 1e-14L);
    last = clipped;
    out.push_back(acc);
  }
  return out;
}

void TridiagonalOperator::validate() const {
  if (diag.empty()) throw std::invalid_argument("empty tridiagonal operator");
  if (offdiag.size() + 1 != diag.size()) throw std::invalid_argument("offdiag must have size N-1");
}

TridiagonalOperator jacobi_matrix(const HahnParams& p, std::size_t N) {
  p.validate();
  if (N == 0) throw std::invalid_argument("jacobi_matrix needs N >= 1");
  TridiagonalOperator t;
  t.diag.resize(N);
  t.offdiag.resize(N - 1);
  for (std::size_t m = 0; m < N; ++m) {
    const auto mu = static_cast<unsigned>(m);
    t.diag[m] = to_real(hahn_A(p, mu) + hahn_C(p, mu) - p.a * p.a);
    if (m + 1 < N) t.offdiag[m] = std::sqrt(to_real(hahn_A(p, mu) * hahn_C(p, mu + 1)));
  }
  return t;
}

std::size_t sturm_count(const TridiagonalOperator& t, Real shift) {
  Real max_e2 = 1;
  for (Real e : t.offdiag) max_e2 = std::max(max_e2, e * e);
  const Real pivmin = std::numeric_limits<Real>::min() * max_e2;
  std::size_t count = 0;
  Real q = t.diag[0] - shift;
  for (std::size_t i = 0;; ++i) {
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    if (i + 1 == t.diag.size()) break;
    q = t.diag[i + 1] - shift - t.offdiag[i] * t.offdiag[i] / q;
  }
  return count;
}

std::vector<Real> eig_tridiag(const TridiagonalOperator& t, Real tol) {
  t.validate();
  const std::size_t n = t.size();
  if (n == 1) return {t.diag[0]};
  Real lo = std::numeric_limits<Real>::max();
  Real hi = std::numeric_limits<Real>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    Real radius = 0;
    if (i > 0) radius += std::fabs(t.offdiag[i - 1]);
    if (i + 1 < n) radius += std::fabs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  const Real slack = std::numeric_limits<Real>::epsilon() * std::max(std::fabs(lo), std::fabs(hi)) * n + tol;
  lo -= slack;
  hi += slack;
  std::vector<Real> values(n);
  constexpr int kMaxIterations = 500;
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  std::vector<int> failed(n, 0);
  parallel_for(n, [&](std::size_t k) {
    Real left = lo, right = hi;
    int iter = 0;
    while (right - left > std::max(tol, 4 * eps * std::max(std::fabs(left), std::fabs(right)))) {
      const Real mid = left + (right - left) / 2;
      if (mid <= left || mid >= right) break;  // bracket at machine resolution
      if (sturm_count(t, mid) >= k + 1) {
        right = mid;
      } else {
        left = mid;
      }
      if (++iter > kMaxIterations) {
        failed[k] = 1;
        break;
      }
    }
    values[k] = left + (right - left) / 2;
  });
  if (std::find(failed.begin(), failed.end(), 1) != failed.end()) {
    throw std::runtime_error("eig_tridiag: tolerance not reached within iteration cap");
  }
  return values;
}

std::vector<Real> spectral_weights(const TridiagonalOperator& t, const std::vector<Real>& eigenvalues) {
  t.validate();
  const std::size_t n = t.size();
  std::vector<Real> out(eigenvalues.size());
  if (n == 1) {
    std::fill(out.begin(), out.end(), Real(1));
    return out;
  }
  Real norm = 0;
  for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::fabs(t.diag[i]) + (i + 1 < n ? 2 * t.offdiag[i] : 0));
  parallel_for(eigenvalues.size(), [&](std::size_t idx) {
    const Real shift = eigenvalues[idx];
    // LU with partial pivoting of the tridiagonal T - shift
    std::vector<Real> dl(t.offdiag), d(n), du(t.offdiag), du2(n, 0);
    std::vector<std::size_t> ipiv(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = t.diag[i] - shift;
      ipiv[i] = i;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::fabs(d[i]) >= std::fabs(dl[i])) {
        if (d[i] == 0) d[i] = std::numeric_limits<Real>::epsilon() * norm;
        const Real fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const Real fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const Real temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        ipiv[i] = i + 1;
      }
    }
    if (d[n - 1] == 0) d[n - 1] = std::numeric_limits<Real>::epsilon() * norm;
    std::vector<Real> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1 + static_cast<Real>((i * 7919) % 101) / 101;
    for (int iter = 0; iter < 3; ++iter) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (ipiv[i] == i) {
          x[i + 1] -= dl[i] * x[i];
        } else {
          const Real temp = x[i];
          x[i] = x[i + 1];
          x[i + 1] = temp - dl[i] * x[i];
        }
      }
      x[n - 1] /= d[n - 1];
      x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
      for (std::size_t i = n - 2; i-- > 0;) x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
      Real scale = 0;
      for (Real v : x) scale = std::max(scale, std::fabs(v));
      for (Real& v : x) v /= scale;
    }
    Real sum = 0;
    for (Real v : x) sum += v * v;
    out[idx] = x[0] * x[0] / sum;
  });
  return out;
}

HahnParams params_for_weight(int weight) {
  if (weight == -1) return odd_weight_params();
  if (weight == 0) return even_weight_params();
  throw std::invalid_argument("no Hahn parameters recorded for weight " + std::to_string(weight));
}

SpectrumReport spectrum_report(int weight, std::size_t N, bool with_kolmogorov, std::size_t bins) {
  SpectrumReport r;
  r.weight = weight;
  r.size = N;
  r.params = params_for_weight(weight);
  // E+E- ~ -(s^2 theta + d) and C = 2 E+E- - mu + mu^2/2 on weight mu
  const Rational mu(weight);
  const Rational offset = 2 * r.params.d + mu - mu * mu / 2;
  r.offset = to_real(offset);
  const Real slope = 2 * to_real(r.params.s * r.params.s);

  const TridiagonalOperator t = jacobi_matrix(r.params, N);
  r.jacobi_eigenvalues = eig_tridiag(t);
  r.casimir_values.reserve(N);
  for (Real theta : r.jacobi_eigenvalues) r.casimir_values.push_back(slope * theta + r.offset);
  r.min = r.casimir_values.front();
  r.max = r.casimir_values.back();

  if (bins > 0) {
    const Real width = (r.max - r.min) / static_cast<Real>(bins);
    for (std::size_t i = 0; i < bins; ++i) r.histogram.push_back({r.min + width * i, r.min + width * (i + 1), 0});
    for (Real v : r.casimir_values) {
      std::size_t i = width > 0 ? static_cast<std::size_t>((v - r.min) / width) : 0;
      r.histogram[std::min(i, bins - 1)].count++;
    }
  }

  if (with_kolmogorov) {
    const std::vector<Real> weights = spectral_weights(t, r.jacobi_eigenvalues);
    std::vector<Real> xs;
    xs.reserve(N);
    for (Real theta : r.jacobi_eigenvalues) xs.push_back(std::sqrt(std::max(theta, Real(0))));
    const std::vector<Real> cdf = measure_cdf(r.params, xs);
    Real below = 0;
    Real ks = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const Real above = below + weights[i];
      ks = std::max({ks, std::fabs(cdf[i] - below), std::fabs(cdf[i] - above)});
      below = above;
    }
    r.kolmogorov = ks;
  }
  return r;
}

}  // namespace mpb
