// Command-line driver: runs verification suites and writes datasets.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mpb/suite.hpp"

namespace {

struct Flags {
  std::vector<std::string> suites;
  std::string emit;
  bool json = false;
  unsigned n = 0;
  int weight = 0;
  unsigned mmax = 0;
  std::size_t size = 0;
  unsigned k = 0;
  unsigned terms = 0;
  double tol = 0;
  double xmax = 20;
  double step = 0.01;
  std::string out;
  std::string config;
};

// Values from the config file fill options that were not given on the command line.
template <class T>
void merge(std::optional<T>& slot, const CLI::App& app, const char* flag, const T& flag_value, const mpb::Json& cfg, const char* key) {
  if (app.count(flag) > 0) {
    slot = flag_value;
  } else if (cfg.contains(key)) {
    slot = cfg.at(key).get<T>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical checks for the principal sl(2) branching of the metaplectic representation"};
  Flags f;
  app.add_option("--suite", f.suites, "Suite to run (repeatable); 'all' runs every suite");
  app.add_option("--emit", f.emit, "Dataset to write: density, spectrum, recurrence, hwv-partials, eigenfunction");
  app.add_flag("--json", f.json, "JSON report / JSON dataset instead of text / CSV");
  app.add_option("--n", f.n, "sl2-matrix: largest n");
  app.add_option("--weight", f.weight, "Weight subspace (-1 or 0 for Hahn data)");
  app.add_option("--mmax", f.mmax, "Largest basis index m");
  app.add_option("--size", f.size, "Truncation size N");
  app.add_option("--k", f.k, "Highest weight index k (k_max for discrete-catalog)");
  app.add_option("--terms", f.terms, "Series length L / terms M / kernel degree bound");
  app.add_option("--tol", f.tol, "Relative tolerance for quadrature checks");
  app.add_option("--xmax", f.xmax, "Grid end for density and eigenfunction");
  app.add_option("--step", f.step, "Grid step for density and eigenfunction");
  app.add_option("--out", f.out, "Write output to this file instead of stdout");
  app.add_option("--config", f.config, "JSON file with default option values and a \"suites\" list");
  CLI11_PARSE(app, argc, argv);

  try {
    mpb::Json cfg = mpb::Json::object();
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      if (!in) throw std::runtime_error("cannot read config " + f.config);
      cfg = mpb::Json::parse(in);
    }
    mpb::SuiteOptions so;
    merge(so.n, app, "--n", f.n, cfg, "n");
    merge(so.weight, app, "--weight", f.weight, cfg, "weight");
    merge(so.mmax, app, "--mmax", f.mmax, cfg, "mmax");
    merge(so.size, app, "--size", f.size, cfg, "size");
    merge(so.k, app, "--k", f.k, cfg, "k");
    merge(so.terms, app, "--terms", f.terms, cfg, "terms");
    merge(so.tol, app, "--tol", f.tol, cfg, "tol");
    if (app.count("--json") == 0 && cfg.contains("json")) f.json = cfg.at("json").get<bool>();
    if (app.count("--emit") == 0 && cfg.contains("emit")) f.emit = cfg.at("emit").get<std::string>();
    if (app.count("--suite") == 0 && cfg.contains("suites")) f.suites = cfg.at("suites").get<std::vector<std::string>>();

    std::ostringstream buffer;
    int status = 0;
    if (!f.emit.empty()) {
      mpb::EmitOptions eo;
      eo.weight = so.weight.value_or(eo.weight);
      eo.mmax = so.mmax.value_or(eo.mmax);
      eo.size = so.size.value_or(eo.size);
      eo.k = so.k.value_or(eo.k);
      eo.terms = so.terms.value_or(eo.terms);
      eo.xmax = f.xmax;
      eo.step = f.step;
      mpb::emit(f.emit, f.json ? mpb::Format::json : mpb::Format::csv, eo, buffer);
    } else {
      std::vector<std::string> names = f.suites;
      if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = mpb::suite_names();
      std::vector<mpb::SuiteReport> reports;
      for (const auto& name : names) {
        reports.push_back(mpb::run_suite(name, so));
        std::cerr << name << ": " << reports.back().wall_time << " s\n";
        if (!reports.back().passed()) status = 1;
        if (!f.json) buffer << mpb::report_text(reports.back());
      }
      if (f.json) buffer << mpb::report_json(reports).dump(2) << '\n';
    }
    if (f.out.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(f.out);
      if (!(file << buffer.str())) throw std::runtime_error("cannot write " + f.out);
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
