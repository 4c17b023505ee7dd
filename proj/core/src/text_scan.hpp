#pragma once

#include <string>

namespace swarmsim::detail {

// Extracts the interior of the first balanced {...} block, respecting single
// and double quotes (with backslash escapes). Returns false if none exists.
bool first_brace_block(const std::string& text, std::string& out);

}  // namespace swarmsim::detail
