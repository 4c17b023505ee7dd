#pragma once

namespace swarmsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Both worlds are 71x71 patches: integer patch centers -35..+35 per axis, so
// the continuous coordinate span is [-35.5, +35.5).
inline constexpr int kDefaultHalfExtent = 35;
inline constexpr double kDefaultSpan = 2.0 * kDefaultHalfExtent + 1.0;

// Nearest patch coordinate for a continuous coordinate (half rounds up).
int nearest_patch(double v);

// Square torus over [-span/2, +span/2) per axis.
class Torus {
 public:
  explicit Torus(double span = kDefaultSpan);

  double span() const { return span_; }

  // Maps a coordinate into [-span/2, +span/2).
  double wrap_coord(double v) const;
  Vec2 wrap(Vec2 p) const;

  // Shortest signed per-axis difference to-from, each in [-span/2, +span/2].
  Vec2 displacement(Vec2 from, Vec2 to) const;

  double distance(Vec2 a, Vec2 b) const;

 private:
  double span_;
  double half_;
};

}  // namespace swarmsim
