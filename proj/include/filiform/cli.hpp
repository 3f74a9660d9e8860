#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace filiform {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  std::string command;  // betti | cocycle | verify | sl2 | gf
  std::string suite;    // for verify
  std::string algebra = "m0";
  std::string field = "q";
  std::optional<int> q, k, qmax, kmax;
  std::optional<std::string> omega, w;  // cocycle index lists, "5,6"
  std::string lambda = "-3/7";          // sl2
  std::optional<int> n;                 // sl2 finite module V(n-2)
  std::string series = "betti";         // gf: betti | euler | pentagonal
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out;
};

/// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace filiform
