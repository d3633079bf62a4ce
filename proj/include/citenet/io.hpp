#pragma once

#include <string>

namespace citenet {

/// Writes `content` to `path` atomically (temp file in the same directory,
/// then rename), so readers never observe a partially written file.
void write_file_atomic(const std::string& path, const std::string& content);

/// Reads a whole file into memory. Throws Error(io) if unreadable.
std::string read_file(const std::string& path);

/// Formats a double for CSV output: up to 12 significant digits, integers
/// without a trailing fraction.
std::string format_number(double v);

}  // namespace citenet
