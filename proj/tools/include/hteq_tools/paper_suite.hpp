#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hteq_tools/suites.hpp"

namespace hteq::suite {

struct CheckResult {
  std::string name;
  std::string claim;  ///< the result being replayed, in words
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = default_seed;
  std::size_t threads = 1;
};

/// Replays every worked example and lemma: answer-set examples,
/// strong-equivalence pairs, separations, the diamond model, disjunction
/// definability, the G3 axioms, the KC lemmas, and seeded property suites.
std::vector<CheckResult> run_paper_suite(const SuiteOptions& options = {});

std::string format_text(const std::vector<CheckResult>& results, bool timings);
/// Timings are left out unless asked for, so that output is reproducible.
nlohmann::json format_json(const std::vector<CheckResult>& results, bool timings);

}  // namespace hteq::suite
