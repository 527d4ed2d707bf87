#pragma once

#include <cstdint>
#include <random>

namespace redd {

std::uint64_t splitmix64(std::uint64_t& state);

/// Seeded stream: mt19937_64 engine, uniforms from the top 53 bits, normals
/// by the Marsaglia polar method. Both transforms are fixed here so draws are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent substream for worker k of a run seeded with `seed`.
  static Rng for_stream(std::uint64_t seed, std::uint64_t k);

  double uniform();  // [0, 1)
  double normal();   // N(0, 1)
  double normal(double sd) { return sd * normal(); }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace redd
