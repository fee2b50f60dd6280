#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "liealg/core.hpp"

namespace liealg {

using json = nlohmann::ordered_json;

/// Decimal form with 17 significant digits (printf "%.17g"); parses back to
/// the identical double.
std::string format_double(double x);

/// Serializes like json::dump but writes every floating-point number with
/// 17 significant digits. Non-finite numbers become null. indent < 0 gives
/// a single line.
std::string dump_json(const json& value, int indent = -1);

json matrix_to_json(const Matrix& m);

/// Accepts a nested array of rows, or an object holding one under
/// "generator" or "A".
Matrix matrix_from_json(const json& value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace liealg
