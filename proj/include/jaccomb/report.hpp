#pragma once

#include <string>

#include "json.hpp"

namespace jaccomb {

inline constexpr const char* report_schema = "jaccomb/1";

// Outcome of one CLI command: a machine-readable JSON report (map-backed, so
// serialization is key-sorted and byte-identical across runs), the rendered
// table for humans, and the process exit code (0 affirmative, 1 negative
// verdict or failed built-in assertion; invalid input escapes as Error and
// becomes exit 2 in the CLI driver).
struct CmdResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string table;
};

struct ClassifyOptions {
  long long degree = 0;
  bool abel = false;
  long long grid = 0;  // 0 = default denominator with stabilization doubling
};

CmdResult cmd_analyze(const std::string& path);
CmdResult cmd_check_general(const std::string& path, const std::string& q_text);
CmdResult cmd_stable_degrees(const std::string& path, const std::string& q_text);
CmdResult cmd_classify(const std::string& path, const ClassifyOptions& opt);
CmdResult cmd_kodaira(int n_max);

}  // namespace jaccomb
