#pragma once

// JSON and CSV encodings of the exact objects and of the numeric datasets.

#include <array>
#include <complex>
#include <ostream>
#include <string>

#include <json.hpp>

#include "mpb/branching.hpp"

namespace mpb {

using Json = nlohmann::ordered_json;

/// Floats at 17 significant digits.
std::string format_real(Real x);

Json to_json(const RadicalScalar& x);  // {"1": "-2/3", "3": "1/1"}
RadicalScalar radical_from_json(const Json& j);

Json to_json(const FockPolynomial& p);  // [{"alpha": [..], "coeff": ..}]
FockPolynomial polynomial_from_json(const Json& j, std::size_t n);

Json to_json(const WeylOperator& op);  // [{"z": [..], "d": [..], "coeff": ..}]
WeylOperator operator_from_json(const Json& j, std::size_t n);

Json to_json(const RadicalMatrix& m);
RadicalMatrix matrix_from_json(const Json& j);

Json to_json(const SpElement& x);  // {"n": .., "blocks": {"A": .., "B": .., "C": ..}}
SpElement sp_element_from_json(const Json& j);

Json to_json(const HwvSeries& s);  // {"k": .., "L": .., "a": ["p/q", ..]}
Json to_json(const HahnParams& p);

enum class Format { json, csv };

struct EmitOptions {
  int weight = -1;          // selects the Hahn parameters for density/spectrum/eigenfunction
  unsigned mmax = 10;       // recurrence rows
  std::size_t size = 500;   // spectrum truncation
  unsigned k = 1;           // hwv-partials
  unsigned terms = 2;       // hwv-partials L, eigenfunction M
  double xmax = 20;
  double step = 0.01;
  std::array<std::complex<Real>, 2> z{std::complex<Real>(0.3L), std::complex<Real>(0.2L)};
};

/// Names accepted by emit().
const std::vector<std::string>& dataset_names();

/// Writes a dataset; throws std::invalid_argument for an unknown name.
void emit(const std::string& dataset, Format format, const EmitOptions& options, std::ostream& out);

}  // namespace mpb
