#pragma once

#include "zecap/io.hpp"

#include <string>
#include <vector>

namespace zecap {

struct DemoScenario {
  std::string name;
  bool pass = false;
  std::string summary;
  Json data;
};

struct DemoReport {
  std::vector<DemoScenario> scenarios;
  bool all_pass = false;
};

/// The bundled regression suite: reproduces the library's reference channels
/// end to end (graph extraction, alpha values, certificates, probes) plus the
/// randomized equivalence and compression properties. Deterministic for a
/// fixed seed.
DemoReport run_regression_demo(const SearchOptions& opts = {});

Json demo_report_to_json(const DemoReport& report, const SearchOptions& opts);

}  // namespace zecap
