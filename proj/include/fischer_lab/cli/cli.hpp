#pragma once

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

namespace fischer_lab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_verdict = 1, exit_usage = 2, exit_cap = 3 };

/// Entry point of the command-line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace fischer_lab::cli
