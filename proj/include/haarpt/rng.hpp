#pragma once

// Seeded random streams. A stream is named by (seed, stream_index); every
// sample j of an experiment draws from substream(j), so results do not depend
// on how samples are distributed over threads.

#include <complex>
#include <cstdint>
#include <random>

namespace haarpt {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream_index = 0) : seed_(seed), stream_index_(stream_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_index), static_cast<std::uint32_t>(stream_index >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  // Child stream j; the index is mixed (splitmix64) so nested substreams of
  // different parents do not collide.
  RngStream substream(std::uint64_t j) const {
    std::uint64_t z = stream_index_ * 0x9E3779B97F4A7C15ULL + j + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return RngStream(seed_, z ^ (z >> 31));
  }

  std::mt19937_64& engine() { return engine_; }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

  // Circular complex Gaussian with E|z|² = 1 (each part variance ½).
  std::complex<double> complex_normal() {
    constexpr double kScale = 0.70710678118654752440;
    double re = normal();
    double im = normal();
    return {kScale * re, kScale * im};
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace haarpt
