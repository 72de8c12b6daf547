#pragma once

#include <cstdint>
#include <string_view>

namespace eurkit {

/// Immutable descriptor of one deterministic random stream. Identical
/// (algorithm, master_seed, stream_index) triples reproduce identical sample
/// sequences bit-for-bit, independent of execution order or thread count;
/// ensemble sample k draws from stream_index k.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  static constexpr std::string_view kAlgorithm = "splitmix64";
};

/// Counter-based generator state derived from an RngStream descriptor.
/// The stream is the splitmix64 output sequence; seeding mixes master seed
/// and stream index through the same finalizer so neighbouring streams are
/// decorrelated. Doubles are built from the top 53 bits, so the sequence is
/// identical on every conforming platform.
class Sampler {
 public:
  explicit Sampler(const RngStream& stream) {
    state_ = mix64(mix64(stream.master_seed) ^
                   mix64(stream.stream_index + 0x9e3779b97f4a7c15ULL));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform_unit() - 1.0; }

 private:
  static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace eurkit
