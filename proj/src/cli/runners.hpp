#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cli/config.hpp"

namespace rml::cli {

struct RunResult {
  bool ok = true;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, bool>> checks;

  void note(std::string line) { notes.push_back(std::move(line)); }
  void check(const std::string& name, bool pass, const std::string& detail);
};

// Dispatch on experiment name (toda-t1, qr-halting, cg-halting,
// universality-compare, theorem1, conditions, lattice-shock, lattice-driven,
// fredholm-grid, export-matrix, export-spectral). Writes CSV outputs and
// summary.txt into cfg["out"], returns the check results; exit code 0 maps
// to RunResult::ok.
RunResult run_experiment(const std::string& experiment, const Config& cfg);

}  // namespace rml::cli
