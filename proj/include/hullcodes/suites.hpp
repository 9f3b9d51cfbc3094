#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullcodes/io.hpp"

namespace hc {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::uint64_t guard = default_guard();
  /// Single-instance override for suites that take a function.
  std::optional<std::string> field;
  std::optional<std::string> fn;
};

struct InstanceVerdict {
  std::string name;
  bool pass = true;
  /// Reported but not counted: skipped grid points and documented counterexamples.
  bool informational = false;
  json details = json::object();
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<InstanceVerdict> instances;
  double seconds = 0;

  std::size_t failures() const;
  /// Deterministic: no timings.
  json to_json() const;
};

const std::vector<std::string>& suite_names();
/// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

}  // namespace hc
