#include <cmath>

#include "doctest.h"
#include "swarmsim/ants/world.hpp"
#include "swarmsim/rng.hpp"

using namespace swarmsim;
using namespace swarmsim::ants;

namespace {
AntsParams test_params() { return AntsParams{}; }
}  // namespace

TEST_CASE("world setup: nest, scent gradient, three food disks") {
  AntsWorld w(test_params(), 1);
  CHECK(w.cell(0, 0).is_nest);
  CHECK(w.cell(0, 0).nest_scent == doctest::Approx(200.0));
  CHECK(w.cell(3, 4).nest_scent == doctest::Approx(195.0));  // 200 - 5
  CHECK(w.cell(4, 0).is_nest);                               // inside radius 5
  CHECK_FALSE(w.cell(5, 0).is_nest);                         // on the boundary: excluded
  CHECK(w.cell(35, 35).nest_scent == doctest::Approx(200.0 - std::hypot(35.0, 35.0)));

  REQUIRE(w.food_patches().size() == 3);
  double prev = 0.0;
  for (const FoodPatchSpec& p : w.food_patches()) {
    const double dist = std::hypot(p.center.x, p.center.y);
    CHECK(dist > prev);  // ids ordered nearest to farthest
    prev = dist;
  }
  CHECK(w.initial_food() == w.patch_food_total());
  CHECK(w.initial_food() > 0);
  CHECK(w.colony_food() == 0);

  // Food cells carry their source id; units within [min,max].
  const FoodPatchSpec& p1 = w.food_patches()[0];
  const PatchCell& c = w.cell(static_cast<int>(p1.center.x), static_cast<int>(p1.center.y));
  CHECK(c.food_source_id == 1);
  CHECK(c.food >= p1.min_units);
  CHECK(c.food <= p1.max_units);
}

TEST_CASE("world setup is a pure function of the seed") {
  AntsWorld a(test_params(), 7);
  AntsWorld b(test_params(), 7);
  CHECK(a.initial_food() == b.initial_food());
  for (int x = -35; x <= 35; x += 5) {
    for (int y = -35; y <= 35; y += 5) {
      CHECK(a.cell(x, y).food == b.cell(x, y).food);
    }
  }
}

TEST_CASE("sensor cones read one step ahead at -45/0/+45") {
  AntsWorld w(test_params(), 1);
  AntState ant;
  ant.pos = {0.0, 0.0};
  ant.heading = 0.0;  // north: front (0,1), left (-45 deg -> (-1,1)), right (1,1)
  w.cell(0, 1).pheromone = 3.0;
  w.cell(-1, 1).pheromone = 1.0;
  w.cell(1, 1).pheromone = 2.0;

  const AntObservation obs = w.observe(ant);
  CHECK(obs.readings.pheromone[0] == doctest::Approx(1.0));
  CHECK(obs.readings.pheromone[1] == doctest::Approx(3.0));
  CHECK(obs.readings.pheromone[2] == doctest::Approx(2.0));
  CHECK(obs.perception.highest_pheromone_dir == SenseDir::kFront);
  CHECK(obs.perception.nest_presence);
  CHECK(obs.perception.carrying == false);

  // Heading north from the origin, the scent gradient is flat left/right and
  // the tie resolves front-first.
  CHECK(obs.perception.stronger_nest_scent_dir == SenseDir::kFront);
}

TEST_CASE("pheromone below the sensing floor reads as none") {
  AntsWorld w(test_params(), 1);
  AntState ant;
  ant.heading = 0.0;
  w.cell(0, 1).pheromone = 0.04;  // below the 0.05 floor
  CHECK(w.sense(ant).highest_pheromone_dir == SenseDir::kNone);
  w.cell(0, 1).pheromone = 0.05;
  CHECK(w.sense(ant).highest_pheromone_dir == SenseDir::kFront);
}

TEST_CASE("nest scent direction points down the gradient toward the nest") {
  AntsWorld w(test_params(), 1);
  AntState ant;
  ant.pos = {10.0, 0.0};
  ant.heading = 0.0;  // north; nest is to the left (west)
  CHECK(w.sense(ant).stronger_nest_scent_dir == SenseDir::kLeft);
  ant.heading = 180.0;  // south; nest is to the right
  CHECK(w.sense(ant).stronger_nest_scent_dir == SenseDir::kRight);
  ant.heading = 270.0;  // west; nest straight ahead
  CHECK(w.sense(ant).stronger_nest_scent_dir == SenseDir::kFront);
}

TEST_CASE("apply: pick up, deposit, rotate, move") {
  AntsWorld w(test_params(), 1);
  RngStream rng(1);

  AntState ant;
  const FoodPatchSpec& p1 = w.food_patches()[0];
  const int fx = static_cast<int>(p1.center.x);
  const int fy = static_cast<int>(p1.center.y);
  ant.pos = {static_cast<double>(fx), static_cast<double>(fy)};
  ant.heading = 90.0;
  const int before = w.cell(fx, fy).food;
  REQUIRE(before > 0);

  AntAction act;
  act.pick_up_food = true;
  act.drop_pheromone = true;
  const AppliedFlags f = w.apply(ant, act, rng);
  CHECK(f.picked_up);
  CHECK(f.dropped_pheromone);
  CHECK_FALSE(f.moved);
  CHECK(ant.carrying);
  CHECK(ant.picked_from_patch == 1);
  CHECK(w.cell(fx, fy).food == before - 1);
  CHECK(w.cell(fx, fy).pheromone == doctest::Approx(60.0));

  // Pick up is a no-op while carrying.
  const AppliedFlags again = w.apply(ant, act, rng);
  CHECK_FALSE(again.picked_up);
  CHECK(w.cell(fx, fy).food == before - 1);
}

TEST_CASE("apply: drop food at the nest banks one unit and turns around") {
  AntsWorld w(test_params(), 1);
  RngStream rng(1);
  AntState ant;
  ant.pos = {0.0, 0.0};
  ant.heading = 45.0;
  ant.carrying = true;
  ant.picked_from_patch = 2;

  AntAction act;
  act.drop_food = true;
  const AppliedFlags f = w.apply(ant, act, rng);
  CHECK(f.dropped_food);
  CHECK(w.colony_food() == 1);
  CHECK_FALSE(ant.carrying);
  CHECK(ant.picked_from_patch == 0);
  CHECK(ant.heading == doctest::Approx(225.0));  // 180-degree turn-back

  // Away from the nest the same action does nothing.
  AntState outside;
  outside.pos = {20.0, 20.0};
  outside.carrying = true;
  CHECK_FALSE(w.apply(outside, act, rng).dropped_food);
  CHECK(w.colony_food() == 1);
}

TEST_CASE("apply: rotation steps and the random resolution") {
  AntsWorld w(test_params(), 1);
  RngStream rng(1);
  AntState ant;
  ant.heading = 90.0;

  AntAction left;
  left.rotate = Rotate::kLeft;
  w.apply(ant, left, rng);
  CHECK(ant.heading == doctest::Approx(45.0));

  AntAction right;
  right.rotate = Rotate::kRight;
  w.apply(ant, right, rng);
  CHECK(ant.heading == doctest::Approx(90.0));

  // rotate=random turns exactly one step, direction from the action stream.
  AntAction random_turn;
  random_turn.rotate = Rotate::kRandom;
  const double before = ant.heading;
  const AppliedFlags f = w.apply(ant, random_turn, rng);
  CHECK(f.rotated);
  const double moved = std::fabs(ant.heading - before);
  CHECK((moved == doctest::Approx(45.0) || moved == doctest::Approx(315.0)));
}

TEST_CASE("apply: forward motion and the edge turn-back") {
  AntsWorld w(test_params(), 1);
  RngStream rng(1);
  AntState ant;
  ant.pos = {0.0, 0.0};
  ant.heading = 90.0;

  AntAction move;
  move.move_forward = true;
  const AppliedFlags f = w.apply(ant, move, rng);
  CHECK(f.moved);
  CHECK(ant.pos.x == doctest::Approx(1.0));
  CHECK(ant.pos.y == doctest::Approx(0.0));

  // At the east edge a forward move is blocked: the ant turns around instead.
  ant.pos = {35.2, 0.0};
  ant.heading = 90.0;
  const AppliedFlags blocked = w.apply(ant, move, rng);
  CHECK_FALSE(blocked.moved);
  CHECK(ant.pos.x == doctest::Approx(35.2));
  CHECK(ant.heading == doctest::Approx(270.0));
}

TEST_CASE("apply runs sub-actions in pick-drop-rotate-move order") {
  AntsWorld w(test_params(), 1);
  RngStream rng(1);

  // An ant on a food cell that picks up and moves in one action carries the
  // unit away and ends one step ahead.
  const FoodPatchSpec& p1 = w.food_patches()[0];
  AntState ant;
  ant.pos = {p1.center.x, p1.center.y};
  ant.heading = 0.0;
  AntAction act;
  act.pick_up_food = true;
  act.move_forward = true;
  const int before = w.cell(static_cast<int>(p1.center.x), static_cast<int>(p1.center.y)).food;
  const AppliedFlags f = w.apply(ant, act, rng);
  CHECK(f.picked_up);
  CHECK(f.moved);
  CHECK(ant.carrying);
  CHECK(w.cell(static_cast<int>(p1.center.x), static_cast<int>(p1.center.y)).food == before - 1);
  CHECK(ant.pos.y == doctest::Approx(p1.center.y + 1.0));

  // Rotation precedes the move: rotate-right + forward from the origin heading
  // north lands northeast-ish (heading 45), not north.
  AntState turner;
  turner.heading = 0.0;
  AntAction turn_and_go;
  turn_and_go.rotate = Rotate::kRight;
  turn_and_go.move_forward = true;
  w.apply(turner, turn_and_go, rng);
  CHECK(turner.heading == doctest::Approx(45.0));
  CHECK(turner.pos.x == doctest::Approx(std::sin(45.0 * M_PI / 180.0)));
  CHECK(turner.pos.y == doctest::Approx(std::cos(45.0 * M_PI / 180.0)));
}

TEST_CASE("env_update conserves mass through diffusion, then evaporates") {
  AntsParams params = test_params();
  AntsWorld w(params, 1);
  w.cell(0, 0).pheromone = 64.0;
  w.cell(10, 10).pheromone = 16.0;
  const double before = w.pheromone_total();

  w.env_update();
  // Every share stays above the floor here, so the only loss is evaporation.
  CHECK(w.pheromone_total() ==
        doctest::Approx(before * (1.0 - params.evaporation_rate)).epsilon(1e-12));

  // The source shed half its mass equally to its 8 neighbors.
  CHECK(w.cell(0, 0).pheromone == doctest::Approx(64.0 * 0.5 * 0.9));
  CHECK(w.cell(1, 0).pheromone == doctest::Approx(64.0 * 0.5 / 8.0 * 0.9));
  CHECK(w.cell(1, 1).pheromone == doctest::Approx(64.0 * 0.5 / 8.0 * 0.9));
}

TEST_CASE("env_update keeps corner shares on the grid") {
  AntsParams params = test_params();
  AntsWorld w(params, 1);
  w.cell(35, 35).pheromone = 64.0;  // corner: only 3 in-bounds neighbors
  w.env_update();
  // 3 shares of 4 leave the cell; the rest stays, so mass is conserved.
  CHECK(w.pheromone_total() == doctest::Approx(64.0 * 0.9).epsilon(1e-12));
  CHECK(w.cell(35, 35).pheromone == doctest::Approx((64.0 - 3.0 * 4.0) * 0.9));
  CHECK(w.cell(34, 35).pheromone == doctest::Approx(4.0 * 0.9));
}

TEST_CASE("env_update clamps sub-floor residue to zero") {
  AntsParams params = test_params();
  AntsWorld w(params, 1);
  w.cell(0, 0).pheromone = 0.4;
  w.env_update();
  // Neighbors receive 0.025 -> 0.0225 after evaporation, below the 0.05 floor.
  CHECK(w.cell(1, 0).pheromone == 0.0);
  CHECK(w.cell(0, 0).pheromone == doctest::Approx(0.2 * 0.9));
  CHECK(w.pheromone_total() == doctest::Approx(0.18));
}

TEST_CASE("spawn_ants: nest start, integer headings, per-agent streams") {
  const auto ants = spawn_ants(10, 42);
  REQUIRE(ants.size() == 10);
  bool all_same = true;
  for (int i = 0; i < 10; ++i) {
    CHECK(ants[i].id == i);
    CHECK(ants[i].pos.x == 0.0);
    CHECK(ants[i].pos.y == 0.0);
    CHECK_FALSE(ants[i].carrying);
    CHECK(ants[i].heading >= 0.0);
    CHECK(ants[i].heading < 360.0);
    CHECK(ants[i].heading == std::floor(ants[i].heading));  // whole degrees
    if (ants[i].heading != ants[0].heading) all_same = false;
  }
  CHECK_FALSE(all_same);

  const auto again = spawn_ants(10, 42);
  for (int i = 0; i < 10; ++i) CHECK(again[i].heading == ants[i].heading);
}
