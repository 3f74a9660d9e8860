#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "filiform/scalar.hpp"

namespace filiform {

struct SuiteOptions {
  std::optional<int> qmax, kmax;
  std::optional<Field> field;
};

/// First disagreement: which check, the cell, and both values.
struct Mismatch {
  std::string check;
  std::optional<int> q, k;
  std::string expected, actual;
};

struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  std::optional<Mismatch> failure;

  bool pass() const { return !failure; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();
/// Throws InvalidParameter for unknown suite names.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace filiform
