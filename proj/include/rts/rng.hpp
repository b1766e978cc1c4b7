#pragma once

#include <cstdint>

namespace rts {

// Self-contained stream so replays do not depend on libstdc++'s
// implementation-defined distributions. xoshiro256++ core, splitmix64 seeding.
//
// Draw accounting, relied on by replay-sensitive callers:
//   next_double / uniform / uniform_int   one raw draw each
//   normal                                two raw draws
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t next_u64();
  double next_double();                  // [0, 1), 53-bit resolution
  double uniform(double lo, double hi);  // [lo, hi)
  int uniform_int(int n);                // {0, ..., n-1}, n >= 1
  double normal();                       // standard normal via Box-Muller

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

// Stream seed of one replication: fixed mixing of base seed and rep index.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace rts
