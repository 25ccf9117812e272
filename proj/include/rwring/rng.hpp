#pragma once

#include <cstdint>

namespace rwring {

// Counter-based seeding: every task (walk, null sample, seeded community, ...)
// gets its own generator whose seed is a pure function of (master seed, stream
// tag, task index). Adding threads or reordering tasks never changes the
// random numbers any task sees.
namespace streams {
inline constexpr std::uint64_t walk = 0x01;
inline constexpr std::uint64_t null_graph = 0x02;
inline constexpr std::uint64_t null_walks = 0x03;
inline constexpr std::uint64_t community = 0x04;
inline constexpr std::uint64_t generator = 0x05;
inline constexpr std::uint64_t seed_sample = 0x06;
inline constexpr std::uint64_t repro = 0x07;
inline constexpr std::uint64_t report = 0x08;
}  // namespace streams

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
  return mix64(mix64(master ^ (stream * 0xd1342543de82ef95ULL)) + index);
}

// SplitMix64: tiny, fast, and identical on every platform. Walks are short,
// so per-walk generator construction must be a single word write.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Multiply-high mapping; bias is bound/2^64,
  // irrelevant at Monte Carlo scale.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace rwring
