#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace driftbayes {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Counter-based random stream (Philox 4x32, 10 rounds).
///
/// Every draw is a pure function of (seed, stream id, draw index), so
/// segments keyed by independent stream ids can be generated in any
/// order without changing results. The sequential interface
/// (`uniform()`, `normal()`) advances an internal draw index; the
/// `*_at(i)` interface addresses draw i directly. Both views consume
/// one 128-bit block per draw and therefore never alias each other as
/// long as each index is used by a single call site.
class PhiloxStream {
 public:
  explicit PhiloxStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : stream_(stream) {
    const std::uint64_t k = detail::splitmix64(seed);
    key_lo_ = static_cast<std::uint32_t>(k);
    key_hi_ = static_cast<std::uint32_t>(k >> 32);
  }

  /// Independent stream derived from this one. Distinct ids give
  /// distinct streams; the mapping is deterministic in (seed, stream, id).
  PhiloxStream substream(std::uint64_t id) const noexcept {
    PhiloxStream s(*this);
    s.stream_ = detail::splitmix64(stream_ ^ detail::splitmix64(id));
    s.pos_ = 0;
    return s;
  }

  /// Raw 128-bit block for counter value i.
  std::array<std::uint32_t, 4> block_at(std::uint64_t i) const noexcept {
    std::uint32_t c0 = static_cast<std::uint32_t>(i);
    std::uint32_t c1 = static_cast<std::uint32_t>(i >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream_);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
    std::uint32_t k0 = key_lo_;
    std::uint32_t k1 = key_hi_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ULL * c0;
      const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += 0x9E3779B9U;
      k1 += 0xBB67AE85U;
    }
    return {c0, c1, c2, c3};
  }

  std::uint64_t u64_at(std::uint64_t i) const noexcept {
    const auto b = block_at(i);
    return (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
  }

  /// Uniform draw in the open interval (0, 1).
  double uniform_at(std::uint64_t i) const noexcept {
    return to_unit_open(u64_at(i));
  }

  /// Standard normal draw i (Box-Muller, one variate per block).
  double normal_at(std::uint64_t i) const noexcept {
    const auto b = block_at(i);
    const std::uint64_t w0 =
        (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
    const std::uint64_t w1 =
        (static_cast<std::uint64_t>(b[2]) << 32) | b[3];
    const double u1 = to_unit_open(w0);
    const double u2 = to_unit_open(w1);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  std::uint64_t next_u64() noexcept { return u64_at(pos_++); }
  double uniform() noexcept { return uniform_at(pos_++); }
  double normal() noexcept { return normal_at(pos_++); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) noexcept {
    return next_u64() % n;
  }

  std::uint64_t stream() const noexcept { return stream_; }
  std::uint64_t position() const noexcept { return pos_; }
  void set_position(std::uint64_t p) noexcept { pos_ = p; }

 private:
  static double to_unit_open(std::uint64_t v) noexcept {
    // 53 significant bits, offset half a ulp: strictly inside (0, 1).
    return (static_cast<double>(v >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint32_t key_lo_ = 0;
  std::uint32_t key_hi_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t pos_ = 0;
};

}  // namespace driftbayes
