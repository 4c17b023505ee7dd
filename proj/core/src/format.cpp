#include "swarmsim/format.hpp"

#include <cstdio>

namespace swarmsim {

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') {
    s.erase(0, 1);  // "-0", "-0.00" -> "0", "0.00"
  }
  return s;
}

std::string format_trimmed(double v, int max_decimals) {
  std::string s = format_fixed(v, max_decimals);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  return s;
}

std::string hex64(unsigned long long v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", v);
  return std::string(buf);
}

}  // namespace swarmsim
