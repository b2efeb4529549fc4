#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "pretzel/classifier.hpp"

namespace pretzel::cli {

enum class Command { kClassify, kSweep, kNorm, kChars, kGroupPresent, kGroupCoxeter };

struct Range {
  long long lo = 0;
  long long hi = 0;
};

/// "a..b" with a <= b.
Range parse_range(const std::string& text);

struct Config {
  Command command = Command::kClassify;
  bool json = false;
  bool cite = false;

  // classify
  std::array<long long, 3> input{};
  Question question = Question::kCyclic;

  // sweep
  Range p_range, q_range, r_range;

  // norm
  long long norm_q = 0;

  // chars, group present, group coxeter
  std::array<long long, 3> triple{};
  std::optional<long long> fill;
  bool coxeter = false;
  bool enumerate = false;
  std::size_t max_cosets = 0;
};

/// Bad flags or malformed values; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// --help was given; `what()` is the help text. Exit code 0.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Validates everything that can be checked without running the command.
Config parse_args(int argc, const char* const* argv);

/// Runs a validated config. Errors are reported on `err` and mapped to exit
/// codes: std::invalid_argument 2, std::domain_error 3, anything else 1. A
/// sweep with a soundness violation exits 1.
int run(const Config& config, std::ostream& out, std::ostream& err);

}  // namespace pretzel::cli
