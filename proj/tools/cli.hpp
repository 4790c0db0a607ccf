#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fbc/dynamics.hpp"

namespace fbc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNotAutomorphism = 2,
  kCapHit = 3,
};

/// Parsed command line. Map and presentation fields hold either inline text
/// or the path of a file containing it.
struct RunConfig {
  std::string command;
  std::string map, map1, map2;
  std::string presentation, presentation1, presentation2;
  std::optional<int> rank;
  int depth = kDefaultDepth;
  std::uint64_t length_cap = kDefaultLengthCap;
  int max_len = 6;
  int max_period = 6;
  bool deep = false;
  std::vector<std::string> group_files;
  bool json = false;
  std::string cache_file;
  bool no_cache = false;
  unsigned workers = 1;
};

extern const std::vector<std::string> kCommands;

/// Throws UsageError when the inputs do not match the command.
void validate(const RunConfig& config);

class UsageError : public std::exception {
 public:
  explicit UsageError(std::string message) : message_(std::move(message)) {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flags may also come from FBC_* environment variables) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest decimal that reads back as the same double.
std::string format_double(double x);

}  // namespace fbc::cli
