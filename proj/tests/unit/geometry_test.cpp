#include <cmath>

#include "doctest.h"
#include "swarmsim/format.hpp"
#include "swarmsim/geometry.hpp"
#include "swarmsim/rng.hpp"

using namespace swarmsim;

TEST_CASE("nearest_patch rounds halves up") {
  CHECK(nearest_patch(0.0) == 0);
  CHECK(nearest_patch(0.49) == 0);
  CHECK(nearest_patch(0.5) == 1);
  CHECK(nearest_patch(-0.5) == 0);
  CHECK(nearest_patch(-0.51) == -1);
  CHECK(nearest_patch(35.49) == 35);
  CHECK(nearest_patch(-35.5) == -35);
}

TEST_CASE("torus wrap maps into the half-open span") {
  Torus t;  // 71-wide
  CHECK(t.span() == doctest::Approx(71.0));
  CHECK(t.wrap_coord(0.0) == 0.0);
  CHECK(t.wrap_coord(35.5) == doctest::Approx(-35.5));
  CHECK(t.wrap_coord(35.6) == doctest::Approx(-35.4));
  CHECK(t.wrap_coord(-35.6) == doctest::Approx(35.4));
  CHECK(t.wrap_coord(71.0) == doctest::Approx(0.0));
  CHECK(t.wrap_coord(-71.0) == doctest::Approx(0.0));

  RngStream rng(3);
  for (int i = 0; i < 5000; ++i) {
    const double v = rng.uniform_real(-500.0, 500.0);
    const double w = t.wrap_coord(v);
    CHECK(w >= -35.5);
    CHECK(w < 35.5);
    CHECK(t.wrap_coord(w) == doctest::Approx(w));  // idempotent
    // Same point modulo the span.
    CHECK(std::fabs(std::remainder(v - w, t.span())) < 1e-9);
  }
}

TEST_CASE("torus displacement takes the short way around") {
  Torus t;
  // Birds near opposite edges of the 71-wide world are 1.2 apart through the
  // seam (0.6 to each edge), not 69.8 across the middle.
  const Vec2 a{-34.9, 0.0};
  const Vec2 b{34.9, 0.0};
  const Vec2 d = t.displacement(a, b);
  CHECK(d.x == doctest::Approx(-1.2));
  CHECK(d.y == doctest::Approx(0.0));
  CHECK(t.distance(a, b) == doctest::Approx(1.2));

  // Brute force: the displacement is the minimum over the 3x3 image offsets.
  RngStream rng(4);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 p{rng.uniform_real(-35.5, 35.5), rng.uniform_real(-35.5, 35.5)};
    const Vec2 q{rng.uniform_real(-35.5, 35.5), rng.uniform_real(-35.5, 35.5)};
    double best = 1e18;
    for (int ox = -1; ox <= 1; ++ox) {
      for (int oy = -1; oy <= 1; ++oy) {
        const double dx = q.x + ox * t.span() - p.x;
        const double dy = q.y + oy * t.span() - p.y;
        best = std::min(best, std::hypot(dx, dy));
      }
    }
    CHECK(t.distance(p, q) == doctest::Approx(best).epsilon(1e-12));
    const Vec2 disp = t.displacement(p, q);
    CHECK(std::hypot(disp.x, disp.y) == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("fixed-point formatting") {
  CHECK(format_fixed(3.14159, 2) == "3.14");
  CHECK(format_fixed(0.0, 2) == "0.00");
  CHECK(format_fixed(-0.0001, 2) == "0.00");  // no negative zero
  CHECK(format_fixed(-1.005, 1) == "-1.0");
  CHECK(format_fixed(2.0, 6) == "2.000000");

  CHECK(format_trimmed(1.50, 2) == "1.5");
  CHECK(format_trimmed(5.00, 2) == "5");
  CHECK(format_trimmed(196.84, 2) == "196.84");
  CHECK(format_trimmed(0.0, 3) == "0");

  CHECK(hex64(0) == "0000000000000000");
  CHECK(hex64(0xdeadbeefULL) == "00000000deadbeef");
}
