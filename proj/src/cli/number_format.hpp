#pragma once

#include <string>

namespace ptsusy::cli {

/// Locale-independent, 17 significant digits; parses back to the same double.
std::string format_double(double value);

/// Shortest representation that round-trips; for human-readable tables.
std::string format_shortest(double value);

/// Writes `contents` to `path` through a temporary file and a rename.
/// Throws InvalidInput when the path cannot be written.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace ptsusy::cli
