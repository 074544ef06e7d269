#pragma once

#include <string>
#include <vector>

#include "campanato/quadrature.hpp"
#include "campanato/serialization.hpp"

namespace campanato {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  double value = 0.0;      // the statistic compared against the threshold
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
  Json data = Json::object();
};

/// The acceptance criteria, numbered 1..11.
CheckResult acceptance_criterion(int number, const GridConfig& grid);
inline constexpr int kAcceptanceCount = 11;

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs the named suite; ConfigError for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const GridConfig& grid);

Json to_json(const CheckResult& check);

}  // namespace campanato
