#pragma once

#include <string>

namespace swarmsim {

// Fixed-point rendering, e.g. format_fixed(3.14159, 2) -> "3.14".
// Negative zero is normalized away ("-0.00" -> "0.00").
std::string format_fixed(double v, int decimals);

// Fixed-point rendering with trailing zeros (and a bare trailing dot)
// trimmed:  1.50 -> "1.5",  5.00 -> "5",  196.84 -> "196.84".
std::string format_trimmed(double v, int max_decimals);

// 64-bit value as zero-padded lowercase hex, for content digests.
std::string hex64(unsigned long long v);

}  // namespace swarmsim
