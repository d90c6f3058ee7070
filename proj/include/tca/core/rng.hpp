#pragma once

#include <cmath>
#include <cstdint>

namespace tca {

/// Philox4x32-10 counter-based generator.
///
/// A draw is addressed by (seed, stream, index): the seed is the key, the
/// stream occupies the upper counter words and the draw index the lower
/// ones. Draws are therefore position-addressable, which makes parallel
/// path generation order-independent and lets coupled experiments share
/// draws by construction.
class Philox {
 public:
  struct Block {
    std::uint32_t w[4];
  };

  static Block generate(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t index) {
    std::uint32_t ctr[4] = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t key[2] = {static_cast<std::uint32_t>(seed),
                            static_cast<std::uint32_t>(seed >> 32)};
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = kMul0 * static_cast<std::uint64_t>(ctr[0]);
      const std::uint64_t p1 = kMul1 * static_cast<std::uint64_t>(ctr[2]);
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t next[4] = {hi1 ^ ctr[1] ^ key[0], lo1,
                                     hi0 ^ ctr[3] ^ key[1], lo0};
      ctr[0] = next[0];
      ctr[1] = next[1];
      ctr[2] = next[2];
      ctr[3] = next[3];
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return Block{{ctr[0], ctr[1], ctr[2], ctr[3]}};
  }

  static std::uint64_t bits64(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t index) {
    const Block b = generate(seed, stream, index);
    return (static_cast<std::uint64_t>(b.w[1]) << 32) | b.w[0];
  }

  /// Uniform double in [0, 1) with 53 random bits.
  static double uniform01(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index) {
    return static_cast<double>(bits64(seed, stream, index) >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kMul0 = 0xD2511F53;
  static constexpr std::uint64_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
};

/// Sequential convenience wrapper over Philox for code that just wants a
/// stream of variates (fixture generation, test data).
class SeqRng {
 public:
  explicit SeqRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  double uniform01() { return Philox::uniform01(seed_, stream_, index_++); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t bits64() { return Philox::bits64(seed_, stream_, index_++); }

  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return bits64() % n; }

  /// Marsaglia polar method; consumes a variable number of draws.
  double normal() {
    for (;;) {
      const double u = 2.0 * uniform01() - 1.0;
      const double v = 2.0 * uniform01() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
};

}  // namespace tca
