#pragma once

// Command dispatch for the coendforge executable. Each command validates the
// spec file first and returns sorted JSON plus an exit code.

#include "coendforge/spec_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coendforge {

enum ExitCode : int { Ok = 0, ValidationFailed = 2, VerdictFailed = 3 };

struct CommandOptions {
    std::string command;
    std::string spec_path;
    std::optional<std::string> field;
    std::optional<std::string> functor;
    std::optional<std::string> coalgebra;
    std::optional<std::string> transformation;
    std::optional<std::string> x;
    std::optional<std::string> y;
    std::vector<std::string> controls;
    std::vector<std::string> seeds;
    std::vector<std::string> probes;
};

struct CommandResult {
    int exit_code = Ok;
    json output;
    /// One line per check, for stderr.
    std::vector<std::string> report;
};

const std::vector<std::string>& command_names();

/// Loads options.spec_path and runs the command. Never throws for bad input.
CommandResult run_command(const CommandOptions& options);
/// Same, on spec text already in memory.
CommandResult run_command_text(const CommandOptions& options, const std::string& spec_text);

}  // namespace coendforge
