#ifndef SPHPLANKS_RANDOM_HPP
#define SPHPLANKS_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace sphplanks {

/// Counter-based random stream.
///
/// The n-th draw of a stream is a pure function of (key, n), so a stream can
/// be split into independent children by id without sharing state. Parallel
/// Monte Carlo batches each take `split(batch_index)` and therefore produce
/// the same numbers regardless of which worker runs them.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit Stream(std::uint64_t seed, std::uint64_t id = 0)
      : seed_(seed), key_(mix(mix(seed) ^ mix(id + 0x632be59bd9b4e019ULL))) {}

  /// Independent child stream; the parent's position is irrelevant.
  Stream split(std::uint64_t id) const {
    Stream child(seed_);
    child.key_ = mix(key_ ^ mix(id ^ 0x9e3779b97f4a7c15ULL) ^ 0xd1b54a32d192ed03ULL);
    return child;
  }

  result_type operator()() {
    ++counter_;
    return mix(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Standard normal draw.
  double normal() { return normal_(*this); }

  std::uint64_t seed() const { return seed_; }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::normal_distribution<double> normal_;
};

/// Derives a seed for a named sub-computation so that the estimates inside
/// one verification never share random numbers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t purpose) {
  Stream s(seed, purpose + 0x51ed27ULL);
  return s();
}

}  // namespace sphplanks

#endif  // SPHPLANKS_RANDOM_HPP
