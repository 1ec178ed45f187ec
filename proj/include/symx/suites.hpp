#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symx/symmetry.hpp"

namespace symx {

struct RunConfig {
  std::string suite;
  std::uint64_t index_size = 2;
  std::uint32_t slots = 2;
  std::uint64_t depth = 2;
  std::uint64_t cases = 1000;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  std::string format = "text";  // or "json"
};

struct SuiteReport {
  std::string suite;
  bool pass = false;
  std::vector<std::string> counterexamples;
  std::uint64_t checked = 0;
  double millis = 0;
  std::uint64_t seed = 0;
};

extern const std::vector<std::string> kSuiteNames;

/// Throws UnknownSuite for an unrecognized suite id.
SuiteReport run_suite(const RunConfig& cfg);

std::string report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

}  // namespace symx
