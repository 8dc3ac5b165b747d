#include "mpb/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mpb {
namespace {

Check make_check(std::string id, std::string description, bool passed, std::string expected, std::string actual) {
  return {std::move(id), std::move(description), passed, std::move(expected), std::move(actual)};
}

Check exact_check(std::string id, std::string description, const std::string& expected, const std::string& actual) {
  const bool ok = expected == actual;
  return make_check(std::move(id), std::move(description), ok, expected, actual);
}

std::vector<int> weights_or_default(const SuiteOptions& o) {
  if (o.weight) return {*o.weight};
  return {-1, 0};
}

void suite_sl2_matrix(const SuiteOptions& o, std::vector<Check>& out) {
  const unsigned n_max = o.n.value_or(8);
  if (n_max == 0) throw std::invalid_argument("--n must be >= 1");
  for (unsigned n = 1; n <= n_max; ++n) {
    for (auto& c : verify_sl2_matrix(principal_sl2(n)).checks) out.push_back(std::move(c));
  }
}

void suite_sl2_weyl(const SuiteOptions&, std::vector<Check>& out) {
  const Sl2Operators s = sl2_operators();
  const WeylOperator C = casimir_operator();
  auto op_check = [&](const char* id, const WeylOperator& expected, const WeylOperator& actual) {
    out.push_back(make_check(id, "n=2, normal ordered", expected == actual, expected == actual ? "" : expected.to_string(),
                             expected == actual ? "" : actual.to_string()));
  };
  const WeylOperator zero(2);
  op_check("[H,E+]=2E+", RadicalScalar(2L) * s.Eplus, commutator(s.H, s.Eplus));
  op_check("[H,E-]=-2E-", RadicalScalar(-2L) * s.Eminus, commutator(s.H, s.Eminus));
  op_check("[E+,E-]=H", s.H, commutator(s.Eplus, s.Eminus));
  op_check("[C,E+]=0", zero, commutator(C, s.Eplus));
  op_check("[C,E-]=0", zero, commutator(C, s.Eminus));
  op_check("[C,H]=0", zero, commutator(C, s.H));

  FockPolynomial c1(2);
  c1.add_term({0, 0}, RadicalScalar(Rational(-9, 2)));
  c1.add_term({1, 3}, RadicalScalar::radical(2, 3));
  out.push_back(exact_check("C(1)", "Casimir on the constant", c1.to_string(), apply(C, FockPolynomial::constant(2, 1L)).to_string()));
  FockPolynomial cz(2);
  cz.add_term({0, 1}, RadicalScalar(-12L));
  cz.add_term({1, 4}, RadicalScalar::radical(2, 3));
  out.push_back(exact_check("C(z2)", "Casimir on z2", cz.to_string(), apply(C, FockPolynomial::monomial({0, 1})).to_string()));
}

void suite_norms(const SuiteOptions& o, std::vector<Check>& out) {
  const unsigned m_max = o.mmax.value_or(20);
  const unsigned k_max = o.k.value_or(10);
  for (ExtraVariable v : {ExtraVariable::z1, ExtraVariable::z2}) {
    const char* name = v == ExtraVariable::z1 ? "z1" : "z2";
    std::string first_bad;
    std::string expected, actual;
    for (unsigned m = 0; m <= m_max && first_bad.empty(); ++m) {
      for (unsigned k = 0; k <= k_max; ++k) {
        const MultiIndex extra = v == ExtraVariable::z1 ? MultiIndex{k, 0} : MultiIndex{0, k};
        const Rational closed = norm_closed_form({m, k, v});
        const RadicalScalar brute = norm_squared(monomial_expand_invariant(m, extra));
        if (!(brute == RadicalScalar(closed))) {
          first_bad = "m=" + std::to_string(m) + " k=" + std::to_string(k);
          expected = rational_string(closed);
          actual = brute.to_string();
          break;
        }
      }
    }
    out.push_back(make_check(std::string("norm ||I^m ") + name + "^k||^2",
                             "closed form vs inner product, m<=" + std::to_string(m_max) + " k<=" + std::to_string(k_max) +
                                 (first_bad.empty() ? "" : ", first mismatch " + first_bad),
                             first_bad.empty(), expected, actual));
  }
}

// Closed-form triples for the two weights with Hahn structure.
std::optional<CoefficientTriple> expected_triple(int weight, unsigned m) {
  const Rational q = m;
  if (weight == -1) return CoefficientTriple{m, (q + Rational(1, 3)) * (q + Rational(2, 3)), -(2 * q * q + q + Rational(1, 3)), q * q};
  if (weight == 0) return CoefficientTriple{m, (q + Rational(2, 3)) * (q + Rational(4, 3)), -(2 * q * q + 2 * q + Rational(2, 3)), q * q};
  return std::nullopt;
}

void suite_recurrence(const SuiteOptions& o, std::vector<Check>& out) {
  const unsigned m_max = o.mmax.value_or(100);
  for (int w : weights_or_default(o)) {
    const std::string tag = "weight " + std::to_string(w);
    CasimirTridiagonal d;
    try {
      d = casimir_tridiagonal(w, m_max);
    } catch (const std::logic_error& e) {
      out.push_back(make_check("tridiagonal", tag, false, "tridiagonal", e.what()));
      continue;
    }
    out.push_back(make_check("tridiagonal", tag + ", m<=" + std::to_string(m_max), true, "", ""));
    if (!expected_triple(w, 0)) continue;
    std::string expected, actual;
    bool ok = true;
    for (const auto& t : d.triples) {
      const CoefficientTriple e = *expected_triple(w, t.m);
      if (e.alpha != t.alpha || e.beta != t.beta || e.gamma != t.gamma) {
        ok = false;
        expected = "m=" + std::to_string(t.m) + " (" + rational_string(e.alpha) + ", " + rational_string(e.beta) + ", " + rational_string(e.gamma) + ")";
        actual = "(" + rational_string(t.alpha) + ", " + rational_string(t.beta) + ", " + rational_string(t.gamma) + ")";
        break;
      }
    }
    out.push_back(make_check("triples", tag + ", closed form", ok, expected, actual));
    const HahnParams p = params_for_weight(w);
    const MatchReport r = match_hahn_params(d, p);
    std::string bad;
    if (const auto m = r.first_mismatch()) bad = "first mismatch at m=" + std::to_string(*m);
    out.push_back(make_check("hahn-match", tag + ", " + p.to_string() + ", coefficients and norms", r.matched(), p.to_string(), bad.empty() ? p.to_string() : bad));
  }
}

void suite_hahn_orthogonality(const SuiteOptions& o, std::vector<Check>& out) {
  const unsigned m_max = o.mmax.value_or(10);
  const double tol = o.tol.value_or(1e-8);
  if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
  for (int w : weights_or_default(o)) {
    const HahnParams p = params_for_weight(w);
    Real worst = 0;
    std::string where;
    for (unsigned m = 0; m <= m_max; ++m) {
      for (unsigned l = 0; l <= m; ++l) {
        const QuadratureResult q = quadrature_orthogonality(m, l, p);
        if (q.relative_error > worst) {
          worst = q.relative_error;
          where = "m=" + std::to_string(m) + " l=" + std::to_string(l);
        }
      }
    }
    out.push_back(make_check("orthogonality", p.to_string() + ", m,l<=" + std::to_string(m_max) + ", worst at " + where,
                             worst <= tol, "<= " + format_real(tol), format_real(worst)));
    const QuadratureResult mass = quadrature_mass(p);
    out.push_back(make_check("mass", p.to_string(), mass.relative_error <= 1e-10L, "|mass-1| <= 1e-10", format_real(mass.value)));
  }
}

void suite_spectrum(const SuiteOptions& o, std::vector<Check>& out) {
  const std::size_t N = o.size.value_or(2000);
  if (N < 8) throw std::invalid_argument("--size must be >= 8");
  for (int w : weights_or_default(o)) {
    const std::string tag = "weight " + std::to_string(w);
    std::vector<Real> minima;
    for (std::size_t n : {N / 8, N / 4, N / 2}) minima.push_back(spectrum_report(w, n, false).min);
    const SpectrumReport s = spectrum_report(w, N);
    minima.push_back(s.min);
    out.push_back(make_check("lower-bound", tag + ", N=" + std::to_string(N), s.min >= 0.5L - 1e-6L, ">= 0.5 - 1e-6", format_real(s.min)));
    bool decreasing = true;
    std::string trend;
    for (std::size_t i = 0; i < minima.size(); ++i) {
      trend += (i ? " " : "") + format_real(minima[i]);
      if (i > 0 && minima[i] > minima[i - 1]) decreasing = false;
    }
    out.push_back(make_check("min-trend", tag + ", N/8, N/4, N/2, N", decreasing && minima.back() >= 0.5L - 1e-6L,
                             "decreasing, above 0.5", trend));
    out.push_back(make_check("kolmogorov", tag + ", spectral measure of e_0 vs orthogonality measure", s.kolmogorov <= 0.05L,
                             "<= 0.05", format_real(s.kolmogorov)));
  }
}

void suite_hwv(const SuiteOptions& o, std::vector<Check>& out) {
  const unsigned L = o.terms.value_or(30);
  std::vector<unsigned> ks;
  if (o.k) {
    ks.push_back(*o.k);
  } else {
    for (unsigned k = 0; k <= 5; ++k) ks.push_back(k);
  }
  for (unsigned k : ks) {
    const std::string tag = "k=" + std::to_string(k) + " L=" + std::to_string(L);
    const HwvSeries s = solve_hwv(k, L);
    out.push_back(make_check("coefficients", tag + ", a_l = k!/(l!(k+l)!)", s.coefficients_match, "exact", s.coefficients_match ? "exact" : "mismatch"));
    out.push_back(make_check("E+ residual", tag + ", top degree band only", s.residual_top_band, "z2^2 f_L", s.residual_top_band ? "z2^2 f_L" : s.residual.to_string()));
    out.push_back(make_check("casimir", tag + ", interior degrees", s.casimir_interior_clean, "clean", s.casimir_interior_clean ? "clean" : "defect below top band"));
    const NormPartials p = hwv_norm_partials(k, L);
    const ConvergenceVerdict expected = k == 0 ? ConvergenceVerdict::divergent : ConvergenceVerdict::convergent;
    out.push_back(make_check("norm verdict", tag, p.verdict == expected, to_string(expected), to_string(p.verdict)));
    if (k == 0) {
      const Real smallest = *std::min_element(p.doubling_values.begin(), p.doubling_values.end());
      out.push_back(make_check("doubling", tag + ", S_2M - S_M >= rigorous lower bound", smallest >= p.bound, ">= " + format_real(p.bound), format_real(smallest)));
    }
    if (k == 1) {
      const NormEnclosure e = hwv_norm_enclosure(1, 1e-10);
      const NormEnclosure finer = hwv_norm_enclosure(1, 1e-11);
      const HighReal width = e.upper - e.lower;
      const bool stable = width <= HighReal(1e-10) && finer.lower >= e.lower && finer.upper <= e.upper;
      out.push_back(make_check("norm value", tag + ", tail-bounded enclosure", stable, "width <= 1e-10, nested",
                               e.lower.str(20) + " .. " + e.upper.str(20)));
    }
  }
}

void suite_discrete_catalog(const SuiteOptions& o, std::vector<Check>& out) {
  const unsigned degree = o.terms.value_or(12);
  const unsigned k_max = o.k.value_or(10);
  const LwsScanReport scan = no_lws_scan(degree);
  out.push_back(make_check("kernel-scan", "ker d2^2 up to degree " + std::to_string(degree) + ", " + std::to_string(scan.kernel.size()) + " elements",
                           scan.no_lowest_weight, "max weight <= 0", std::to_string(scan.max_weight)));
  auto weights = [](const std::vector<ReprDescriptor>& v) {
    std::string s;
    for (const auto& r : v) s += (s.empty() ? "" : ",") + std::to_string(r.extremal_weight());
    return s;
  };
  std::string all, even, odd;
  for (unsigned k = 1; k <= k_max; ++k) {
    const std::string w = std::to_string(-static_cast<int>(3 * k + 1));
    all += (all.empty() ? "" : ",") + w;
    std::string& part = k % 2 == 0 ? even : odd;
    part += (part.empty() ? "" : ",") + w;
  }
  out.push_back(exact_check("catalog", "highest weights -(3k+1), k=1.." + std::to_string(k_max), all, weights(discrete_components(Parity::all, k_max))));
  out.push_back(exact_check("even-part", "weights -6l-1", even, weights(discrete_components(Parity::even, k_max))));
  out.push_back(exact_check("odd-part", "weights -6l+2", odd, weights(discrete_components(Parity::odd, k_max))));
  bool lowest = false;
  std::string casimirs, expected;
  for (const auto& r : discrete_components(Parity::all, k_max)) {
    lowest = lowest || r.kind == ReprKind::lowest_weight;
    const Rational nu = r.parameter;
    expected += (expected.empty() ? "" : ",") + rational_string(nu * nu / 2 - nu);
    casimirs += (casimirs.empty() ? "" : ",") + rational_string(rep_casimir_eigenvalue(r));
  }
  out.push_back(make_check("no-lowest-weight", "catalog has no lowest weight entries", !lowest, "none", lowest ? "present" : "none"));
  out.push_back(exact_check("casimir-values", "nu^2/2 - nu", expected, casimirs));
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sl2-matrix", "sl2-weyl", "norms", "recurrence",
                                              "hahn-orthogonality", "spectrum", "hwv", "discrete-catalog"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  using Runner = void (*)(const SuiteOptions&, std::vector<Check>&);
  Runner run = nullptr;
  if (name == "sl2-matrix") run = suite_sl2_matrix;
  if (name == "sl2-weyl") run = suite_sl2_weyl;
  if (name == "norms") run = suite_norms;
  if (name == "recurrence") run = suite_recurrence;
  if (name == "hahn-orthogonality") run = suite_hahn_orthogonality;
  if (name == "spectrum") run = suite_spectrum;
  if (name == "hwv") run = suite_hwv;
  if (name == "discrete-catalog") run = suite_discrete_catalog;
  if (!run) throw std::invalid_argument("unknown suite: " + name);
  SuiteReport r;
  r.suite = name;
  const auto start = std::chrono::steady_clock::now();
  run(options, r.checks);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.id << " (" << c.description << ")";
    if (!c.passed || !c.actual.empty()) os << " expected " << c.expected << ", got " << c.actual;
    os << '\n';
  }
  return os.str();
}

Json report_json(const std::vector<SuiteReport>& reports) {
  Json j;
  j["schema"] = "1";
  j["suites"] = Json::array();
  bool all = true;
  for (const auto& r : reports) {
    Json s;
    s["suite"] = r.suite;
    s["status"] = r.passed() ? "pass" : "fail";
    s["checks"] = Json::array();
    for (const auto& c : r.checks) {
      s["checks"].push_back({{"id", c.id}, {"description", c.description}, {"status", c.passed ? "pass" : "fail"},
                             {"expected", c.expected}, {"actual", c.actual}});
    }
    all = all && r.passed();
    j["suites"].push_back(std::move(s));
  }
  j["status"] = all ? "pass" : "fail";
  return j;
}

}  // namespace mpb
