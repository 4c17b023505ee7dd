#pragma once

#include <string>

namespace swarmsim {

enum class Scenario { kAnts, kFlocking };

std::string to_string(Scenario s);  // "ants" / "flocking"

}  // namespace swarmsim
