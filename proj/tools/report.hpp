#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bellbox::cli {

enum class Format { Table, Json, Csv };

/// Locale-independent rendering with 10 significant digits; -0 normalizes
/// to 0. The same function feeds every output format, so values are
/// byte-identical across formats and platforms.
std::string format_double(double value);

/// Scalar as it appears in CSV and table output (strings unquoted).
std::string format_scalar(const nlohmann::json& value);

/// Compact key-sorted JSON document, floats at 10 significant digits.
std::string to_json(const nlohmann::json& report);

/// Depth-first (path, value) pairs; nested keys joined with '.', array
/// elements addressed by index.
std::vector<std::pair<std::string, std::string>> flatten(
    const nlohmann::json& report);

/// Header row plus one value row.
std::string to_csv(const nlohmann::json& report);

/// Aligned key/value listing for terminals.
std::string to_table(const nlohmann::json& report);

std::string render(const nlohmann::json& report, Format format);

}  // namespace bellbox::cli
