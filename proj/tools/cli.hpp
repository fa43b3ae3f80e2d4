#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclepack::cli {

// Exit codes of `pack`; other subcommands use kOk / kInputError.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNotExist = 2;
inline constexpr int kExhausted = 3;

/// Runs the command line (without the program name). JSON and golden text go
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclepack::cli
