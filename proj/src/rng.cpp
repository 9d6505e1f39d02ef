#include "signet/rng.hpp"

#include <cmath>

namespace signet::rng {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        round_once(counter, key);
    }
    return counter;
}

std::array<std::uint64_t, 2> block_u64(std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t counter) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
        static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32)};
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                              static_cast<std::uint32_t>(seed >> 32)};
    const auto out = philox4x32(ctr, key);
    return {out[0] | (static_cast<std::uint64_t>(out[1]) << 32),
            out[2] | (static_cast<std::uint64_t>(out[3]) << 32)};
}

std::uint64_t random_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return block_u64(seed, stream, counter)[0];
}

double random_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return to_unit(random_u64(seed, stream, counter));
}

std::array<double, 2> random_unit2(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t counter) {
    const auto b = block_u64(seed, stream, counter);
    return {to_unit(b[0]), to_unit(b[1])};
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(mix64(a) ^ b); }

std::uint64_t Stream::next_u64() { return random_u64(seed_, stream_, counter_++); }

double Stream::next_unit() { return to_unit(next_u64()); }

double Stream::next_gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const auto b = block_u64(seed_, stream_, counter_++);
    const double u1 = 1.0 - to_unit(b[0]); // (0,1], keeps log finite
    const double u2 = to_unit(b[1]);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

} // namespace signet::rng
