#pragma once

// Named verification suites run by the command-line tool.

#include <optional>
#include <string>
#include <vector>

#include "mpb/io.hpp"

namespace mpb {

struct SuiteOptions {
  std::optional<unsigned> n;       // sl2-matrix: largest n
  std::optional<int> weight;       // recurrence, hahn-orthogonality, spectrum
  std::optional<unsigned> mmax;    // norms, recurrence, hahn-orthogonality
  std::optional<std::size_t> size; // spectrum
  std::optional<unsigned> k;       // norms: largest k; hwv: single k; discrete-catalog: k_max
  std::optional<unsigned> terms;   // hwv: L; discrete-catalog: kernel degree bound
  std::optional<double> tol;       // hahn-orthogonality relative tolerance
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double wall_time = 0;  // seconds
  bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or invalid option values.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

std::string report_text(const SuiteReport& r);
/// Schema "1"; wall times are left out so repeated runs are byte-identical.
Json report_json(const std::vector<SuiteReport>& reports);

}  // namespace mpb
