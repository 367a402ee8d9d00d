#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oltr {

// Deterministic stream over splitmix64. One stream drives an entire run so
// that a (config, seed) pair replays byte-identically on any platform; the
// generator is fully specified here rather than delegated to <random>, whose
// distributions are implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  // Derived stream: decorrelates substreams (e.g. the environment draw) from
  // the main run stream without consuming from it.
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : state_(mix(seed ^ mix(stream_id + 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("bernoulli probability outside [0,1]");
    return next_double() < p;
  }

  // Uniform in [0, n) without modulo bias.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below(0)");
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Fisher-Yates; identical draw order everywhere.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace oltr
