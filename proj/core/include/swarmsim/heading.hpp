#pragma once

#include <optional>
#include <vector>

namespace swarmsim {

// Compass convention throughout: 0 = north, 90 = east, angles increase clockwise.

// Maps any finite angle into [0, 360). Throws std::invalid_argument on NaN/inf.
double normalize_heading(double degrees);

// Signed shortest rotation from `current` to `target`, in (-180, 180].
// Positive means clockwise. normalize_heading(current + result) == target.
double subtract_headings(double target, double current);

// Turns from `current` toward `target` by at most `max_turn` degrees along the
// shorter direction; returns the new normalized heading. max_turn < 0 throws.
double turn_at_most(double current, double target, double max_turn);

// Unit displacement for one step along a compass heading: x grows east, y north.
double heading_unit_x(double degrees);
double heading_unit_y(double degrees);

// Compass bearing of the displacement (dx east, dy north); (0,0) maps to 0.
double bearing_of(double dx, double dy);

// Vector-averaged mean of compass headings; empty input or a cancelling set of
// unit vectors (resultant length ~ 0) yields nullopt.
std::optional<double> circular_mean_heading(const std::vector<double>& headings_deg);

}  // namespace swarmsim
