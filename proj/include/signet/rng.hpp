#pragma once

#include <array>
#include <cstdint>

namespace signet::rng {

// Philox4x32-10 counter-based generator. Any (seed, stream, counter) triple
// addresses an independent 128-bit block, so parallel consumers stay
// deterministic without shared state.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// two 64-bit lanes of the block addressed by (seed, stream, counter)
std::array<std::uint64_t, 2> block_u64(std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t counter);

std::uint64_t random_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

inline double to_unit(std::uint64_t x) {
    // [0,1) with 53 random bits
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

double random_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// both uniforms of one block; used where a pair of decisions belongs to one index
std::array<double, 2> random_unit2(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t counter);

// splitmix64 finalizer; composes stream ids and hashes content keys
std::uint64_t mix64(std::uint64_t x);
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);

// sequential view over one (seed, stream) lane
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}
    std::uint64_t next_u64();
    double next_unit();
    double next_gauss(); // Box-Muller, one value per call

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace signet::rng
