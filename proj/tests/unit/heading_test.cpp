#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "swarmsim/heading.hpp"
#include "swarmsim/rng.hpp"

using namespace swarmsim;

TEST_CASE("normalize_heading maps into [0,360)") {
  CHECK(normalize_heading(0.0) == 0.0);
  CHECK(normalize_heading(360.0) == 0.0);
  CHECK(normalize_heading(370.0) == doctest::Approx(10.0));
  CHECK(normalize_heading(-90.0) == doctest::Approx(270.0));
  CHECK(normalize_heading(-720.0) == 0.0);
  CHECK(normalize_heading(359.5) == doctest::Approx(359.5));
  CHECK_THROWS_AS(normalize_heading(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(normalize_heading(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("subtract_headings gives the signed shortest rotation") {
  CHECK(subtract_headings(10.0, 350.0) == doctest::Approx(20.0));
  CHECK(subtract_headings(350.0, 10.0) == doctest::Approx(-20.0));
  CHECK(subtract_headings(90.0, 90.0) == 0.0);
  // Opposite headings resolve to +180, never -180.
  CHECK(subtract_headings(180.0, 0.0) == doctest::Approx(180.0));
  CHECK(subtract_headings(0.0, 180.0) == doctest::Approx(180.0));
}

TEST_CASE("subtract_headings properties on random pairs") {
  RngStream rng(2024);
  for (int i = 0; i < 20000; ++i) {
    const double target = rng.uniform_real(-720.0, 720.0);
    const double current = rng.uniform_real(-720.0, 720.0);
    const double d = subtract_headings(target, current);
    CHECK(d > -180.0);
    CHECK(d <= 180.0);
    // Adding the result to `current` reaches `target` (mod 360).
    const double reached = normalize_heading(current + d);
    const double want = normalize_heading(target);
    CHECK(std::fabs(subtract_headings(want, reached)) < 1e-9);
  }
}

TEST_CASE("turn_at_most reaches near targets and caps far ones") {
  CHECK(turn_at_most(10.0, 12.0, 5.0) == doctest::Approx(12.0));
  CHECK(turn_at_most(10.0, 50.0, 5.0) == doctest::Approx(15.0));
  CHECK(turn_at_most(10.0, 330.0, 5.0) == doctest::Approx(5.0));  // shorter way is counterclockwise
  CHECK(turn_at_most(0.0, 0.0, 5.0) == 0.0);
  CHECK_THROWS_AS(turn_at_most(0.0, 90.0, -1.0), std::invalid_argument);
}

TEST_CASE("turn_at_most worked chain: align then cohere") {
  // One neighbor at (0.53, -3.69) heading 248, own heading 138:
  // align toward 248 capped at 5 gives 143; cohere toward the bearing of the
  // displacement capped at 3 gives 146.
  const double aligned = turn_at_most(138.0, 248.0, 5.0);
  CHECK(aligned == doctest::Approx(143.0));
  const double bearing = bearing_of(0.53, -3.69);
  CHECK(bearing == doctest::Approx(171.827).epsilon(0.001));
  CHECK(turn_at_most(aligned, bearing, 3.0) == doctest::Approx(146.0));
}

TEST_CASE("turn_at_most properties on random triples") {
  RngStream rng(77);
  for (int i = 0; i < 20000; ++i) {
    const double current = rng.uniform_real(0.0, 360.0);
    const double target = rng.uniform_real(0.0, 360.0);
    const double cap = rng.uniform_real(0.0, 180.0);
    const double out = turn_at_most(current, target, cap);
    CHECK(out >= 0.0);
    CHECK(out < 360.0);
    const double moved = subtract_headings(out, current);
    CHECK(std::fabs(moved) <= cap + 1e-9);
    const double gap = subtract_headings(target, current);
    if (std::fabs(gap) <= cap) {
      CHECK(std::fabs(subtract_headings(target, out)) < 1e-9);  // reached
    } else {
      CHECK(std::fabs(std::fabs(moved) - cap) < 1e-9);  // turned exactly the cap
      CHECK(moved * gap >= 0.0);                        // toward the target
    }
  }
}

TEST_CASE("compass unit vectors and bearings") {
  CHECK(heading_unit_x(0.0) == doctest::Approx(0.0));
  CHECK(heading_unit_y(0.0) == doctest::Approx(1.0));   // north
  CHECK(heading_unit_x(90.0) == doctest::Approx(1.0));  // east
  CHECK(heading_unit_y(90.0) == doctest::Approx(0.0));
  CHECK(bearing_of(0.0, 1.0) == doctest::Approx(0.0));
  CHECK(bearing_of(1.0, 0.0) == doctest::Approx(90.0));
  CHECK(bearing_of(0.0, -1.0) == doctest::Approx(180.0));
  CHECK(bearing_of(-1.0, 0.0) == doctest::Approx(270.0));
  CHECK(bearing_of(0.0, 0.0) == 0.0);

  RngStream rng(5);
  for (int i = 0; i < 5000; ++i) {
    const double h = rng.uniform_real(0.0, 360.0);
    const double back = bearing_of(heading_unit_x(h), heading_unit_y(h));
    CHECK(std::fabs(subtract_headings(h, back)) < 1e-9);
  }
}

TEST_CASE("circular_mean_heading averages on the circle") {
  CHECK_FALSE(circular_mean_heading({}).has_value());
  CHECK(*circular_mean_heading({90.0}) == doctest::Approx(90.0));
  // Means across the wrap seam stay near the seam, not at 180.
  CHECK(*circular_mean_heading({10.0, 350.0}) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(*circular_mean_heading({358.0, 4.0}) == doctest::Approx(1.0));
  // A cancelling set has no mean.
  CHECK_FALSE(circular_mean_heading({0.0, 180.0}).has_value());
  CHECK_FALSE(circular_mean_heading({0.0, 120.0, 240.0}).has_value());
}
