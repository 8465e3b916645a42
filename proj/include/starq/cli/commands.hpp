#ifndef STARQ_CLI_COMMANDS_HPP
#define STARQ_CLI_COMMANDS_HPP

#include <optional>
#include <string>

#include <json.hpp>

namespace starq
{

inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failure = 1;
inline constexpr int exit_parse_error = 2;

struct CommandOptions {
    std::optional<std::size_t> order;
    std::optional<unsigned> max_degree;
    bool timing = true;
    std::optional<std::string> f;
    std::optional<std::string> g;
};

struct CommandResult {
    int exit_code = exit_pass;
    nlohmann::json report;
    // One-paragraph human summary.
    std::string summary;
};

// command: validate | derive | verify-tables | apply
CommandResult run_command(const std::string &command, const std::string &spec_path, const CommandOptions &options);

std::string engine_version();

} // namespace starq

#endif
