#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sn/cli/json_io.hpp"
#include "sn/element.hpp"

namespace sn::cli {

/// Malformed command line; reported with exit code 3.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 1;
  unsigned trunc = 8;
  std::uint64_t seed = 0;
  bool json = false;
  bool quick = false;
  Flavor flavor = Flavor::S;
  std::vector<std::string> args;  // positionals after the command path
  std::vector<std::string> primes;
  std::optional<std::string> point;
  std::optional<std::string> subset;
  std::optional<std::string> lambda;
  std::optional<std::string> module;
  std::optional<std::string> vector;
  std::optional<int> factor;
  std::optional<unsigned> imax;
  std::optional<unsigned> count;

  AlgebraContext ctx() const { return {n, flavor}; }
};

struct CommandResult {
  std::string status = "ok";
  json payload;
  std::vector<std::string> diagnostics;
  /// Machine-readable error code when status is "error".
  std::string code;
  /// Plain-text rendering; derived from the payload when empty.
  std::string text;
};

using Handler = CommandResult (*)(const Options&);

struct CommandSpec {
  std::string path;
  /// Library operations reachable through this command.
  std::vector<std::string> ops;
  std::string usage;
  Handler handler;
};

const std::vector<CommandSpec>& command_table();

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
  CommandResult result;
};

/// Parses argv (without the program name), dispatches, and renders output.
/// Exit codes: 0 ok, 2 domain error, 3 usage error.
Outcome run_command(const std::vector<std::string>& argv);

std::string usage_text();

}  // namespace sn::cli
