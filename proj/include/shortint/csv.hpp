#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shortint/budget.hpp"

namespace shortint {

inline constexpr const char* kToolVersion = "0.1.0";

// CSV layout: "# schema=<subcommand>/v1", "# version=...", one "# spec ..."
// echo line, a header row, data rows, then "# aggregate k=v" trailers.
// No timestamps anywhere, so identical runs produce identical bytes.
struct CsvReport {
  std::string schema;
  std::string spec_echo;
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::pair<std::string, std::string>> aggregates;

  std::string to_string() const;
  // write to <path>.tmp then rename, so failures never leave partial files
  void write_atomic(const std::string& path) const;
};

std::string fmt_real(double v);            // 12 significant digits
std::string fmt_ratio(u64 num, u64 den);   // "num/den"

}  // namespace shortint
