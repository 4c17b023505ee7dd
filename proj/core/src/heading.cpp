#include "swarmsim/heading.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;
}  // namespace

double normalize_heading(double degrees) {
  if (!std::isfinite(degrees)) {
    throw std::invalid_argument("normalize_heading: heading must be finite");
  }
  double r = std::fmod(degrees, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;  // fmod round-off can land exactly on 360
  return r + 0.0;           // flush -0.0
}

double subtract_headings(double target, double current) {
  double d = normalize_heading(target) - normalize_heading(current);
  if (d > 180.0) d -= 360.0;
  if (d <= -180.0) d += 360.0;
  return d + 0.0;
}

double turn_at_most(double current, double target, double max_turn) {
  if (!(max_turn >= 0.0)) {
    throw std::invalid_argument("turn_at_most: max_turn must be >= 0");
  }
  const double delta = subtract_headings(target, current);
  if (std::fabs(delta) <= max_turn) return normalize_heading(target);
  return normalize_heading(current + std::copysign(max_turn, delta));
}

double heading_unit_x(double degrees) { return std::sin(degrees * kDegToRad); }
double heading_unit_y(double degrees) { return std::cos(degrees * kDegToRad); }

double bearing_of(double dx, double dy) {
  if (dx == 0.0 && dy == 0.0) return 0.0;
  return normalize_heading(std::atan2(dx, dy) * kRadToDeg);
}

std::optional<double> circular_mean_heading(const std::vector<double>& headings_deg) {
  if (headings_deg.empty()) return std::nullopt;
  double sx = 0.0, sy = 0.0;
  for (double h : headings_deg) {
    sx += heading_unit_x(h);
    sy += heading_unit_y(h);
  }
  if (std::hypot(sx, sy) < 1e-12) return std::nullopt;
  return bearing_of(sx, sy);
}

}  // namespace swarmsim
