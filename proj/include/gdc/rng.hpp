#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace gdc {

// SplitMix64 step; used to derive independent engine seeds.
std::uint64_t splitmix64(std::uint64_t& state);
// Seed for stream `stream` under master seed `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// mt19937_64 engine with platform-independent conversions to floats and ranges.
class Rng {
 public:
  Rng(std::uint64_t master, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  double uniform();       // [0,1), 53 bits
  double uniform_open();  // (0,1)
  std::uint64_t below(std::uint64_t bound);
  double normal();
  double exponential();

 private:
  std::mt19937_64 engine_;
};

// Runs body(block) for block in [0, blocks) on up to `jobs` threads.
void parallel_blocks(std::size_t blocks, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace gdc
