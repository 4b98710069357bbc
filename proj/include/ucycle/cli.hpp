#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "ucycle/families.hpp"

namespace ucycle::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kInternal = 3 };

enum class Format { raw, per_node, dot };

struct RunConfig {
  std::string command;
  std::string family;
  std::size_t n = 0;
  std::string n_range;  // bench: "A..B"
  std::string mode;     // empty: family default
  std::size_t change_index = 0;  // 0: family default
  DbConstraint constraint;
  Format format = Format::raw;
  bool verify = false;
  std::string start;
  std::size_t reps = 3;
  std::size_t bots = 0;
};

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_count_bots(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export_dot(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ucycle::cli
