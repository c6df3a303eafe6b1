#pragma once

#include <optional>
#include <string>

#include "headorder/document.hpp"

namespace headorder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitInput = 2;

struct Grid {
  std::size_t n_lo = 2, n_hi = 2;
  Int a_lo = 1, a_hi = 1;
};

// "n=2..10,a=1..30"; a single value such as "n=5" is a one-point range.
Grid parse_grid(const std::string& text);

struct Options {
  std::string command;
  std::optional<std::size_t> max_steps;
  bool oracle = false;
  Int prime = 2;  // oracle prime for inputs that carry none
  std::optional<Grid> grid;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct Outcome {
  Json report;
  int exit_code = kExitOk;
};

bool known_command(const std::string& name);
bool needs_input(const Options& opts);

// Library errors propagate; the caller maps them to kExitInput.
Outcome run(const Options& opts, const std::optional<Document>& doc);

}  // namespace headorder::cli
