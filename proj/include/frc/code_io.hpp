#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "frc/code.hpp"

namespace frc {

// json:       {"n": int, "theta": int, "nodes": [[int, ...], ...]}, 0-based.
// csv-matrix: n rows of theta comma-separated 0/1 cells, no header.
enum class CodeFormat { Json, CsvMatrix };

// ".csv" selects CsvMatrix; anything else is Json.
CodeFormat format_for_path(const std::filesystem::path& path);

// Malformed text throws Error{ParseError}; a well-formed file describing an
// invalid code throws Error{InvariantViolation} naming the underlying failure.
FrCode parse_code(std::string_view text, CodeFormat format);
std::string format_code(const FrCode& code, CodeFormat format);

FrCode import_code(const std::filesystem::path& path, CodeFormat format);
FrCode import_code(const std::filesystem::path& path);
void export_code(const FrCode& code, const std::filesystem::path& path, CodeFormat format);
void export_code(const FrCode& code, const std::filesystem::path& path);

}  // namespace frc
