#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "parind/verify.hpp"
#include "src/cli/problem.hpp"

namespace parind::cli {

struct RunContext {
  WeylLimits weyl;
  LatticeLimits lattice;
  BruhatComparator bruhat;  // only consulted by verify:all
};

struct Report {
  nlohmann::ordered_json json;
  std::string text;
  std::optional<std::string> dot;  // lattice tasks only
  int exit_code = 0;               // 1 when a verification fails
};

Report run_task(const Problem& problem, const RunContext& ctx);

}  // namespace parind::cli
