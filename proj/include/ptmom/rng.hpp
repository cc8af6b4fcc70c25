#pragma once

#include <array>
#include <cstdint>

namespace ptmom {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11 constants).
//
// Stream layout used throughout the toolkit: the 128-bit counter is
// (block_lo, block_hi, stream_lo, stream_hi) and the 64-bit key is the run
// seed. A "stream" is one independent random sequence (one per snapshot
// index, one per test helper, ...); `block` counts 128-bit outputs within
// the stream. Identical (seed, stream, draw sequence) gives identical
// numbers on every platform and for any thread count.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // uniform on [0, 1), 53-bit resolution
    double uniform();
    // uniform integer in [0, n)
    std::uint32_t uniform_below(std::uint32_t n);
    // standard normal via Box-Muller (pairs cached)
    double gaussian();

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
    bool have_gauss_ = false;
    double gauss_spare_ = 0.0;
};

}  // namespace ptmom
