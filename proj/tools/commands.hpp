#ifndef MVOP_TOOLS_COMMANDS_HPP
#define MVOP_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mvop/serialize.hpp"

namespace mvop::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 2,
  kInvalidParameters = 3,
  kBitGuard = 4,
};

enum class Format { json, csv, pretty };

struct RunConfig {
  std::string p = "1/1";
  std::string n = "3/1";
  int w_max = 10;
  int s_max = 2;
  std::vector<std::string> commands;
  std::string out;
  Format format = Format::json;
  bool seed_sweep = false;
  bool kpr = false;
  std::size_t max_bits = kDefaultMaxBits;
};

constexpr int kMaxW = 24;
constexpr int kMaxS = 6;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
  int exit_code = kOk;
  Json report;
  Table table;
};

/// Parameter grid used by --seed-sweep, as (p, n) strings.
std::vector<std::pair<std::string, std::string>> sweep_grid();

CommandResult cmd_family(const RunConfig& cfg);
CommandResult cmd_algebra(const RunConfig& cfg);
CommandResult cmd_dw(const RunConfig& cfg);

/// Runs cfg.commands (family, algebra, dw or all) once, or over the sweep
/// grid concurrently when cfg.seed_sweep is set. The exit code is the
/// largest one among the parts.
CommandResult run(const RunConfig& cfg);

std::string render(const CommandResult& result, Format format);

/// Full command line entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mvop::cli

#endif  // MVOP_TOOLS_COMMANDS_HPP
