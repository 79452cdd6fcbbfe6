#include "levyscale/rng.hpp"

#include <cmath>

namespace levyscale {

namespace {

// Philox-4x64 constants (Salmon et al., "Parallel random numbers: as easy as
// 1, 2, 3").
constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), counter_{0, 0, 0, 0}, block_{},
      block_pos_(4) {}

void RngStream::refill() {
  std::array<std::uint64_t, 4> x = counter_;
  std::uint64_t k0 = seed_;
  std::uint64_t k1 = stream_id_;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, x[0], hi0, lo0);
    mulhilo(kPhiloxM1, x[2], hi1, lo1);
    x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  block_ = x;
  block_pos_ = 0;
  for (int i = 0; i < 4; ++i) {
    if (++counter_[i] != 0) break;
  }
}

std::uint64_t RngStream::next_u64() {
  if (block_pos_ == 4) refill();
  return block_[block_pos_++];
}

double RngStream::uniform01() {
  // 53 random bits, shifted into (0,1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double RngStream::exponential() { return -std::log(uniform01()); }

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform01()));
  const double theta = 6.283185307179586476925286766559 * uniform01();
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

std::uint64_t substream_id(std::uint64_t base, std::uint64_t a,
                           std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(mix64(mix64(base) ^ a) ^ b) ^ c);
}

}  // namespace levyscale
