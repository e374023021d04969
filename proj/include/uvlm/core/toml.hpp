#pragma once

// Reader for the TOML subset used by run and grid files: comments, [tables]
// and [dotted.tables], bare/quoted/dotted keys, basic and literal strings,
// integers, floats, booleans, arrays (multi-line allowed) and inline tables.
// Dates and array-of-tables are rejected.

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

namespace uvlm {

struct TomlError : std::runtime_error {
    TomlError(const std::string& what, int line);
    int line;
};

nlohmann::json parse_toml(std::string_view text);
nlohmann::json read_toml(const std::filesystem::path& path);

}  // namespace uvlm
