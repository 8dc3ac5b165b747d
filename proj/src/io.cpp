#include "mpb/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mpb {
namespace {

MultiIndex index_from_json(const Json& j, std::size_t n) {
  MultiIndex alpha = j.get<MultiIndex>();
  if (alpha.size() != n) throw std::invalid_argument("multi-index has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(n));
  return alpha;
}

std::size_t grid_points(double xmax, double step) {
  if (!(step > 0) || !(xmax >= 0)) throw std::invalid_argument("grid needs step > 0 and xmax >= 0");
  return static_cast<std::size_t>(std::llround(xmax / step)) + 1;
}

void write_rows(std::ostream& out, const std::string& header, const std::vector<std::vector<std::string>>& rows) {
  out << header << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

Json envelope(const std::string& dataset) {
  Json j;
  j["schema"] = "1";
  j["dataset"] = dataset;
  return j;
}

void emit_density(Format format, const EmitOptions& o, std::ostream& out) {
  const HahnParams p = params_for_weight(o.weight);
  const std::size_t n = grid_points(o.xmax, o.step);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Real x = static_cast<Real>(i) * static_cast<Real>(o.step);
    rows.push_back({format_real(x), format_real(measure_density(x, p))});
  }
  if (format == Format::csv) return write_rows(out, "x,value", rows);
  Json j = envelope("density");
  j["params"] = to_json(p);
  j["rows"] = Json::array();
  for (const auto& r : rows) j["rows"].push_back({{"x", r[0]}, {"value", r[1]}});
  out << j.dump(2) << '\n';
}

void emit_spectrum(Format format, const EmitOptions& o, std::ostream& out) {
  const SpectrumReport s = spectrum_report(o.weight, o.size);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < s.size; ++i) {
    rows.push_back({std::to_string(i), format_real(s.jacobi_eigenvalues[i]), format_real(s.casimir_values[i])});
  }
  if (format == Format::csv) return write_rows(out, "index,jacobi,casimir", rows);
  Json j = envelope("spectrum");
  j["weight"] = s.weight;
  j["size"] = s.size;
  j["params"] = to_json(s.params);
  j["min"] = format_real(s.min);
  j["max"] = format_real(s.max);
  j["kolmogorov"] = format_real(s.kolmogorov);
  j["histogram"] = Json::array();
  for (const auto& b : s.histogram) j["histogram"].push_back({{"lo", format_real(b.lo)}, {"hi", format_real(b.hi)}, {"count", b.count}});
  j["casimir"] = Json::array();
  for (const auto& r : rows) j["casimir"].push_back(r[2]);
  out << j.dump(2) << '\n';
}

void emit_recurrence(Format format, const EmitOptions& o, std::ostream& out) {
  const CasimirTridiagonal d = casimir_tridiagonal(o.weight, o.mmax);
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : d.triples) {
    rows.push_back({std::to_string(t.m), rational_string(t.alpha), rational_string(t.beta), rational_string(t.gamma),
                    rational_string(d.norms[t.m])});
  }
  if (format == Format::csv) return write_rows(out, "m,alpha,beta,gamma,norm", rows);
  Json j = envelope("recurrence");
  j["weight"] = d.weight;
  j["operator"] = d.kind == TridiagonalKind::casimir ? "casimir" : "ninth_raising_lowering";
  j["triples"] = Json::array();
  for (const auto& r : rows) {
    j["triples"].push_back({{"m", std::stoi(r[0])}, {"alpha", r[1]}, {"beta", r[2]}, {"gamma", r[3]}, {"norm", r[4]}});
  }
  out << j.dump(2) << '\n';
}

void emit_hwv_partials(Format format, const EmitOptions& o, std::ostream& out) {
  const NormPartials p = hwv_norm_partials(o.k, o.terms);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t l = 0; l < p.partial_sums.size(); ++l) {
    rows.push_back({std::to_string(l), rational_string(p.partial_sums[l]), format_real(rational_to<Real>(p.partial_sums[l]))});
  }
  if (format == Format::csv) return write_rows(out, "L,partial_sum,value", rows);
  Json j = envelope("hwv-partials");
  j["k"] = p.k;
  j["L"] = p.L;
  j["verdict"] = to_string(p.verdict);
  j["partial_sums"] = Json::array();
  for (const auto& r : rows) j["partial_sums"].push_back(r[1]);
  j["doubling"] = Json::array();
  for (std::size_t i = 0; i < p.doubling_points.size(); ++i) {
    j["doubling"].push_back({{"M", p.doubling_points[i]}, {"value", format_real(p.doubling_values[i])}});
  }
  j["bound"] = format_real(p.bound);
  out << j.dump(2) << '\n';
}

void emit_eigenfunction(Format format, const EmitOptions& o, std::ostream& out) {
  const std::size_t n = grid_points(o.xmax, o.step);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Real x = static_cast<Real>(i) * static_cast<Real>(o.step);
    const auto v = generalized_eigenfunction(x, o.z, o.terms, o.weight);
    rows.push_back({format_real(x), format_real(v.real()), format_real(v.imag())});
  }
  if (format == Format::csv) return write_rows(out, "x,re,im", rows);
  Json j = envelope("eigenfunction");
  j["weight"] = o.weight;
  j["terms"] = o.terms;
  j["z"] = {format_real(o.z[0].real()), format_real(o.z[0].imag()), format_real(o.z[1].real()), format_real(o.z[1].imag())};
  j["rows"] = Json::array();
  for (const auto& r : rows) j["rows"].push_back({{"x", r[0]}, {"re", r[1]}, {"im", r[2]}});
  out << j.dump(2) << '\n';
}

}  // namespace

std::string format_real(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", x);
  return buf;
}

Json to_json(const RadicalScalar& x) {
  Json j = Json::object();
  for (const auto& [d, q] : x.terms()) j[std::to_string(d)] = rational_string(q);
  return j;
}

RadicalScalar radical_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("radical scalar must be a JSON object");
  RadicalScalar out;
  for (const auto& [key, value] : j.items()) {
    out += RadicalScalar::radical(parse_rational(value.get<std::string>()), std::stoull(key));
  }
  return out;
}

Json to_json(const FockPolynomial& p) {
  Json j = Json::array();
  for (const auto& [alpha, c] : p.terms()) j.push_back({{"alpha", alpha}, {"coeff", to_json(c)}});
  return j;
}

FockPolynomial polynomial_from_json(const Json& j, std::size_t n) {
  FockPolynomial p(n);
  for (const auto& t : j) p.add_term(index_from_json(t.at("alpha"), n), radical_from_json(t.at("coeff")));
  return p;
}

Json to_json(const WeylOperator& op) {
  Json j = Json::array();
  for (const auto& [key, c] : op.terms()) j.push_back({{"z", key.first}, {"d", key.second}, {"coeff", to_json(c)}});
  return j;
}

WeylOperator operator_from_json(const Json& j, std::size_t n) {
  WeylOperator op(n);
  for (const auto& t : j) op.add_term(index_from_json(t.at("z"), n), index_from_json(t.at("d"), n), radical_from_json(t.at("coeff")));
  return op;
}

Json to_json(const RadicalMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    j.push_back(row);
  }
  return j;
}

RadicalMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RadicalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = radical_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const SpElement& x) {
  return {{"n", x.n}, {"blocks", {{"A", to_json(x.A)}, {"B", to_json(x.B)}, {"C", to_json(x.C)}}}};
}

SpElement sp_element_from_json(const Json& j) {
  SpElement x;
  x.n = j.at("n").get<std::size_t>();
  const Json& b = j.at("blocks");
  x.A = matrix_from_json(b.at("A"));
  x.B = matrix_from_json(b.at("B"));
  x.C = matrix_from_json(b.at("C"));
  x.validate();
  return x;
}

Json to_json(const HwvSeries& s) {
  Json a = Json::array();
  for (const auto& q : s.a) a.push_back(rational_string(q));
  return {{"k", s.k}, {"L", s.L}, {"a", a}};
}

Json to_json(const HahnParams& p) {
  return {{"a", rational_string(p.a)}, {"b", rational_string(p.b)}, {"c", rational_string(p.c)},
          {"d", rational_string(p.d)}, {"s", rational_string(p.s)}};
}

const std::vector<std::string>& dataset_names() {
  static const std::vector<std::string> names{"density", "spectrum", "recurrence", "hwv-partials", "eigenfunction"};
  return names;
}

void emit(const std::string& dataset, Format format, const EmitOptions& options, std::ostream& out) {
  if (dataset == "density") return emit_density(format, options, out);
  if (dataset == "spectrum") return emit_spectrum(format, options, out);
  if (dataset == "recurrence") return emit_recurrence(format, options, out);
  if (dataset == "hwv-partials") return emit_hwv_partials(format, options, out);
  if (dataset == "eigenfunction") return emit_eigenfunction(format, options, out);
  throw std::invalid_argument("unknown dataset: " + dataset);
}

}  // namespace mpb
