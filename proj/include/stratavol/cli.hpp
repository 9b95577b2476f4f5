#pragma once

#include "stratavol/errors.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace stratavol {

enum class OutputFormat { json, csv, plain };

struct Config {
    std::optional<std::filesystem::path> cache_dir;
    Limits caps;
    OutputFormat output = OutputFormat::json;
};

/// Reads a JSON config file. Unknown keys, nonpositive caps and malformed values are DomainErrors.
Config load_config(const std::filesystem::path& file);

/// Parses "3,1" into {3, 1}; throws DomainError on anything but comma-separated integers.
std::vector<int> parse_int_list(const std::string& text);

/// Exit codes: 0 ok, 1 verification failure, 2 domain or usage error, 3 resource cap.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int domain_error = 2;
inline constexpr int resource_cap = 3;
}  // namespace exit_code

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stratavol
