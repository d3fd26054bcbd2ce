#include "shortint/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace shortint {

std::string CsvReport::to_string() const {
  std::ostringstream out;
  out << "# schema=" << schema << "\n";
  out << "# version=" << kToolVersion << "\n";
  if (!spec_echo.empty()) out << "# spec " << spec_echo << "\n";
  for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) out << row << "\n";
  for (const auto& [k, v] : aggregates) out << "# aggregate " << k << "=" << v << "\n";
  return out.str();
}

void CsvReport::write_atomic(const std::string& path) const {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file " + tmp);
    f << to_string();
    if (!f.good()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename failed for " + path);
  }
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_ratio(u64 num, u64 den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace shortint
