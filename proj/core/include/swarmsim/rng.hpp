#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace swarmsim {

// Deterministic random stream. Each consumer derives its own stream from
// (master_seed, agent_id, purpose) so that adding a new draw site never
// perturbs the draws of existing ones. The raw mt19937_64 engine sequence is
// fully specified by the standard; the distribution helpers below are
// hand-rolled because std::uniform_*_distribution output is not portable
// across standard library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream derive(std::uint64_t master_seed, std::uint64_t agent_id,
                          std::string_view purpose);

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, bound); bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);

  // [0, 1) with 53 bits of precision.
  double uniform_real();

  // [lo, hi)
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

  // Fisher-Yates, consuming one uniform_below per element.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Sentinel agent id for engine-level streams (world setup, scheduling).
inline constexpr std::uint64_t kEngineAgentId = ~std::uint64_t{0};

// FNV-1a over bytes; used for stream derivation and content digests.
std::uint64_t fnv1a64(std::string_view bytes);

// Stateless 64-bit finalizer (splitmix64 style), used to combine seed material.
std::uint64_t mix64(std::uint64_t x);

}  // namespace swarmsim
