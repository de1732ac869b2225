// Locale-independent text output: CSV profiles and atomic file writes.
#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "lamb/profile.hpp"

namespace lamb {

/// Render a double with 17 significant digits via std::to_chars: locale
/// independent and round-trip exact.
inline std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc())
    throw std::runtime_error("failed to format double");
  return std::string(buf, res.ptr);
}

/// Write `content` to `path` through a sibling temporary file renamed into
/// place, so an interrupted run never leaves a partial file behind.
inline void write_text_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("failed renaming into " + path.string());
  }
}

/// Profile as CSV text: header "x,u", one row per sample, LF line endings.
inline std::string profile_csv(const SolutionProfile& profile) {
  std::string out = "x,u\n";
  for (std::size_t i = 0; i < profile.grid.size(); ++i) {
    out += format_double(profile.grid[i]);
    out += ',';
    out += format_double(profile.values[i]);
    out += '\n';
  }
  return out;
}

inline void write_profile_csv(const std::filesystem::path& path,
                              const SolutionProfile& profile) {
  write_text_atomic(path, profile_csv(profile));
}

}  // namespace lamb
