#pragma once

#include <cstddef>
#include <cstdint>

namespace fisherrao {

// Counter-based SplitMix64. The i-th draw (i = 0, 1, ...) of a stream with
// key k is mix(k + (i + 1) * 0x9E3779B97F4A7C15), where mix is the SplitMix64
// finalizer. Substream s of key k has key mix(k ^ mix(s)).
class Rng {
 public:
  explicit Rng(std::uint64_t key = 0) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  // (x >> 11) * 2^-53, in [0, 1)
  double uniform();
  double uniform(double lo, double hi);
  // uniform integer in [0, n) by rejection; n > 0
  std::uint64_t below(std::uint64_t n);

  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace fisherrao
