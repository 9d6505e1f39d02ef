#include <doctest.h>

#include <set>

#include "signet/rng.hpp"

using namespace signet;

TEST_CASE("philox4x32-10 known-answer vectors") {
    // Random123 reference kat values
    auto out = rng::philox4x32({0, 0, 0, 0}, {0, 0});
    CHECK(out[0] == 0x6627e8d5u);
    CHECK(out[1] == 0xe169c58du);
    CHECK(out[2] == 0xbc57ac4cu);
    CHECK(out[3] == 0x9b00dbd8u);

    out = rng::philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          {0xffffffffu, 0xffffffffu});
    CHECK(out[0] == 0x408f276du);
    CHECK(out[1] == 0x41c83b0eu);
    CHECK(out[2] == 0xa20bc7c6u);
    CHECK(out[3] == 0x6d5451fdu);

    out = rng::philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u});
    CHECK(out[0] == 0xd16cfe09u);
    CHECK(out[1] == 0x94fdccebu);
    CHECK(out[2] == 0x5001e420u);
    CHECK(out[3] == 0x24126ea1u);
}

TEST_CASE("counter addressing is pure and collision-free in practice") {
    CHECK(rng::random_u64(1, 2, 3) == rng::random_u64(1, 2, 3));
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 20; ++s)
        for (std::uint64_t c = 0; c < 50; ++c) seen.insert(rng::random_u64(7, s, c));
    CHECK(seen.size() == 20 * 50);
}

TEST_CASE("unit doubles land in [0,1) with a sane mean") {
    double sum = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        const double u = rng::random_unit(42, 0, i);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / trials == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("gaussian stream has zero mean and unit variance") {
    rng::Stream s(9, 4);
    double sum = 0, sum2 = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        const double g = s.next_gauss();
        sum += g;
        sum2 += g * g;
    }
    CHECK(sum / trials == doctest::Approx(0.0).epsilon(0.05));
    CHECK(sum2 / trials == doctest::Approx(1.0).epsilon(0.05));
}
