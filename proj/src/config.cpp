#include "shortint/config.hpp"

#include <fstream>
#include <sstream>

namespace shortint {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<ConfigEntry> parse_config_text(const std::string& text) {
  std::vector<ConfigEntry> entries;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line) +
                                  ": expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(line) + ": empty key");
    if (value.empty())
      throw std::invalid_argument("config line " + std::to_string(line) +
                                  ": empty value for key '" + key + "'");
    entries.push_back({line, key, value});
  }
  return entries;
}

std::vector<ConfigEntry> parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace shortint
