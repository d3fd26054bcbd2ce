#pragma once

#include <string>
#include <vector>

#include "shortint/budget.hpp"

namespace shortint {

struct ConfigEntry {
  int line;
  std::string key;
  std::string value;
};

// Plain "key = value" lines; '#' starts a comment; blank lines ignored.
// Malformed lines raise std::invalid_argument naming the line number.
// Key validation against the subcommand's parameter set is the caller's job.
std::vector<ConfigEntry> parse_config_file(const std::string& path);
std::vector<ConfigEntry> parse_config_text(const std::string& text);

}  // namespace shortint
