#include "cli/number_format.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "ptsusy/errors.hpp"

namespace ptsusy::cli {

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) throw ComputationError("failed to format floating-point value");
  return std::string(buffer.data(), end);
}

std::string format_shortest(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw ComputationError("failed to format floating-point value");
  return std::string(buffer.data(), end);
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) throw InvalidInput("cannot write output file '" + path + "'");
    stream << contents;
    stream.close();
    if (!stream) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw InvalidInput("cannot write output file '" + path + "'");
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw InvalidInput("cannot move output into place at '" + path + "': " + ec.message());
  }
}

}  // namespace ptsusy::cli
