#pragma once

#include <cstdint>
#include <random>

namespace liealg {

/// Seedable, splittable pseudo-random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniform doubles take the top 53 bits of one engine output, and
/// Gaussians use the Box-Muller transform on two uniforms. Neither relies on
/// the implementation-defined std:: distributions, so a given seed produces
/// the same values with every conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform();

  /// Standard normal draw.
  double normal();

  /// Independent child stream; advances this stream by one draw.
  Rng split();

 private:
  std::mt19937_64 engine_;
};

}  // namespace liealg
