#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rackcolor::text {

/// A non-empty source line split into whitespace tokens, comments removed.
struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize_lines(std::string_view source);
std::string read_file(const std::string& path);
bool parse_int(std::string_view token, long long& out);

}  // namespace rackcolor::text
