#include "text_scan.hpp"

namespace swarmsim::detail {

bool first_brace_block(const std::string& text, std::string& out) {
  const std::size_t open = text.find('{');
  if (open == std::string::npos) return false;
  int depth = 0;
  char quote = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (quote != 0) {
      if (c == '\\') {
        ++i;
        continue;
      }
      if (c == quote) quote = 0;
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}') {
      --depth;
      if (depth == 0) {
        out = text.substr(open + 1, i - open - 1);
        return true;
      }
    }
  }
  return false;
}

}  // namespace swarmsim::detail
