#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "swarmsim/rng.hpp"

using namespace swarmsim;

TEST_CASE("derived streams are reproducible and independent") {
  RngStream a = RngStream::derive(42, 7, "policy");
  RngStream b = RngStream::derive(42, 7, "policy");
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream other_agent = RngStream::derive(42, 8, "policy");
  RngStream other_purpose = RngStream::derive(42, 7, "action");
  RngStream other_seed = RngStream::derive(43, 7, "policy");
  RngStream base = RngStream::derive(42, 7, "policy");
  CHECK(base.next_u64() != other_agent.next_u64());
  CHECK(RngStream::derive(42, 7, "policy").next_u64() != other_purpose.next_u64());
  CHECK(RngStream::derive(42, 7, "policy").next_u64() != other_seed.next_u64());
}

TEST_CASE("uniform_below stays in range and is roughly uniform") {
  RngStream rng(9001);
  CHECK(rng.uniform_below(1) == 0);

  std::vector<int> buckets(8, 0);
  const int draws = 80000;
  for (int i = 0; i < draws; ++i) {
    const std::uint64_t v = rng.uniform_below(8);
    REQUIRE(v < 8);
    ++buckets[static_cast<std::size_t>(v)];
  }
  for (int count : buckets) {
    CHECK(count > draws / 8 - 800);
    CHECK(count < draws / 8 + 800);
  }
}

TEST_CASE("uniform_real covers [0,1) and respects bounds") {
  RngStream rng(13);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 50000; ++i) {
    const double v = rng.uniform_real();
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);

  for (int i = 0; i < 1000; ++i) {
    const double v = rng.uniform_real(-35.5, 35.5);
    CHECK(v >= -35.5);
    CHECK(v < 35.5);
  }
}

TEST_CASE("shuffle permutes deterministically") {
  std::vector<int> items(50);
  std::iota(items.begin(), items.end(), 0);
  RngStream a(99);
  a.shuffle(items);

  std::vector<int> again(50);
  std::iota(again.begin(), again.end(), 0);
  RngStream b(99);
  b.shuffle(again);
  CHECK(items == again);

  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> iota(50);
  std::iota(iota.begin(), iota.end(), 0);
  CHECK(sorted == iota);  // still a permutation

  std::vector<int> different(50);
  std::iota(different.begin(), different.end(), 0);
  RngStream c(100);
  c.shuffle(different);
  CHECK(items != different);
}

TEST_CASE("fnv1a64 matches the published constants") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("mix64 is deterministic and spreads inputs") {
  CHECK(mix64(1) == mix64(1));
  CHECK(mix64(1) != mix64(2));
  CHECK(mix64(2) != mix64(3));
}
