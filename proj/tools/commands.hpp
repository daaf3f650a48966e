#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalsup/multiagent.hpp"

namespace scalsup::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInvalid = 2, kBudget = 3 };

struct CommonFlags {
    std::string model;
    std::optional<std::size_t> state_budget;
    /// GROUP=INT overrides of k.
    std::vector<std::string> k;
    std::optional<SefMode> sef;
};

/// Loads the model file and applies the command-line overrides.
MultiAgentModel load_with_flags(const CommonFlags& flags);

int cmd_synth(const CommonFlags& flags, const std::string& out_path, bool expand, std::ostream& out,
              std::ostream& err);
int cmd_verify(const CommonFlags& flags, const std::string& condition, std::optional<std::size_t> max_len,
               std::ostream& out, std::ostream& err);
int cmd_compare(const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_enum(const CommonFlags& flags, const std::string& object, std::size_t max_len, std::ostream& out,
             std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace scalsup::cli
