#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclicsum/numeric.hpp"

namespace csf::cli {

enum class Command { tables, dims, necklaces, lucas, verify_sym, verify_num };
enum class Format { tsv, json };

inline constexpr int combinatorial_cap = 16;
inline constexpr int rank_cap = 12;
inline constexpr int numeric_cap = 6;

struct RunConfig {
    Command command = Command::tables;
    std::optional<int> max_weight; // per-command default when absent
    std::optional<int> n;
    std::optional<int> l;
    std::size_t cutoff = default_cutoff;
    double tol = 1e-4;
    Format format = Format::tsv;
    Series series = Series::half_split;
};

/// Thrown for cap violations and malformed arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandOutput {
    int exit_code = 0; // 0 ok, 1 verification failure
    std::string text;
};

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

CommandOutput cmd_tables(const RunConfig& cfg);
CommandOutput cmd_dims(const RunConfig& cfg);
CommandOutput cmd_necklaces(const RunConfig& cfg);
CommandOutput cmd_lucas(const RunConfig& cfg);
CommandOutput cmd_verify_sym(const RunConfig& cfg);
CommandOutput cmd_verify_num(const RunConfig& cfg);

/// Dispatch on cfg.command. Throws UsageError on cap violations.
CommandOutput run(const RunConfig& cfg);

} // namespace csf::cli
