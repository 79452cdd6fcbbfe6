#pragma once

#include <array>
#include <cstdint>

namespace levyscale {

/// Counter-based random stream (Philox-4x64, 10 rounds).
///
/// A stream is fully identified by (seed, stream_id): the pair is the cipher
/// key and the generator state is a 256-bit block counter. Identical
/// identifiers replay the identical sample sequence; distinct stream_ids give
/// statistically independent streams, so replicates parallelize without any
/// shared state.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  /// Uniform draw on the open interval (0,1).
  double uniform01();

  /// Unit-rate exponential.
  double exponential();

  /// Standard normal (Box-Muller; the partner draw is cached).
  double normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> block_;
  int block_pos_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Derive a substream id from a phase tag and up to three indices.
/// Pure function of its arguments, so allocation of streams to replicates is
/// reproducible no matter how work is scheduled.
std::uint64_t substream_id(std::uint64_t base, std::uint64_t a,
                           std::uint64_t b = 0, std::uint64_t c = 0);

// Phase tags used by the library when it derives stream ids internally.
inline constexpr std::uint64_t kStreamNoiseTest = 0x10;
inline constexpr std::uint64_t kStreamEnsemble = 0x20;
inline constexpr std::uint64_t kStreamCorrector = 0x30;
inline constexpr std::uint64_t kStreamExperiment = 0x40;
inline constexpr std::uint64_t kStreamValidation = 0x50;

}  // namespace levyscale
