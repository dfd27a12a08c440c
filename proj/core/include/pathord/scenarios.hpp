#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathord/oracle.hpp"

namespace pathord::scenarios {

// One named oracle run. `expect_pass` is false for negative controls, whose
// report is supposed to come back failing.
struct Scenario {
  std::string name;
  OracleReport report;
  bool expect_pass = true;
  bool ok() const { return report.passed == expect_pass; }
};

// thm2.5, thm3.6, prop2.6, laws, totality.
std::vector<std::string> checks();

// Runs the bundled instances of a check. `size` overrides the universe size
// bound of every run. Throws std::invalid_argument for an unknown check.
std::vector<Scenario> run(const std::string& check, std::optional<std::size_t> size = {});

}  // namespace pathord::scenarios
