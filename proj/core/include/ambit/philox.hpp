#pragma once

#include <array>
#include <cstdint>

namespace ambit {

/// Philox4x32-10 counter-based generator. Each 128-bit counter maps to an
/// independent 4x32-bit block under a 64-bit key, so parallel replication
/// blocks reproduce identically regardless of thread count or schedule.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Counter = std::array<std::uint32_t, 4>;

  explicit Philox4x32(std::uint64_t seed)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)) {}

  Block operator()(const Counter& counter) const {
    Block x = counter;
    std::uint32_t k0 = key0_;
    std::uint32_t k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k0 += 0x9E3779B9u;
        k1 += 0xBB67AE85u;
      }
      const std::uint64_t m0 = static_cast<std::uint64_t>(0xD2511F53u) * x[0];
      const std::uint64_t m1 = static_cast<std::uint64_t>(0xCD9E8D57u) * x[2];
      x = Block{static_cast<std::uint32_t>(m1 >> 32) ^ x[1] ^ k0,
                static_cast<std::uint32_t>(m1),
                static_cast<std::uint32_t>(m0 >> 32) ^ x[3] ^ k1,
                static_cast<std::uint32_t>(m0)};
    }
    return x;
  }

  /// Block for (stream, index): stream picks an independent substream,
  /// index counts blocks within it.
  Block block(std::uint64_t stream, std::uint32_t index) const {
    return (*this)(Counter{static_cast<std::uint32_t>(stream),
                           static_cast<std::uint32_t>(stream >> 32), index, 0});
  }

  /// Uniform double in (0, 1) from one 32-bit word.
  static double to_uniform(std::uint32_t word) {
    return (static_cast<double>(word) + 0.5) * 0x1p-32;
  }

 private:
  std::uint32_t key0_;
  std::uint32_t key1_;
};

}  // namespace ambit
