#include "swarmsim/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

int nearest_patch(double v) { return static_cast<int>(std::floor(v + 0.5)); }

Torus::Torus(double span) : span_(span), half_(span / 2.0) {
  if (!(span > 0.0)) throw std::invalid_argument("Torus: span must be positive");
}

double Torus::wrap_coord(double v) const {
  double r = std::fmod(v + half_, span_);
  if (r < 0.0) r += span_;
  return r - half_;
}

Vec2 Torus::wrap(Vec2 p) const { return {wrap_coord(p.x), wrap_coord(p.y)}; }

Vec2 Torus::displacement(Vec2 from, Vec2 to) const {
  double dx = to.x - from.x;
  double dy = to.y - from.y;
  dx -= span_ * std::round(dx / span_);
  dy -= span_ * std::round(dy / span_);
  return {dx, dy};
}

double Torus::distance(Vec2 a, Vec2 b) const {
  const Vec2 d = displacement(a, b);
  return std::hypot(d.x, d.y);
}

}  // namespace swarmsim
