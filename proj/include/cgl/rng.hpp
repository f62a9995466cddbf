#pragma once

#include <array>
#include <cstdint>

namespace cgl::rng {

// All randomness in the library flows through Philox4x32-10 keyed by the
// user seed, with the 128-bit counter carrying (element index, stream,
// purpose). Draws are pure functions of (seed, purpose, stream, index), so
// results are independent of evaluation order and thread count.
//
// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC 2011.
inline constexpr char kStreamVersion[] = "philox4x32-10/v1";

enum class Purpose : std::uint32_t {
    genset = 1,  // per-element inclusion draws for G(G,p) sampling
};

namespace detail {

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

} // namespace detail

inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += detail::kPhiloxW0;
            key[1] += detail::kPhiloxW1;
        }
        detail::philox_round(ctr, key);
    }
    return ctr;
}

inline std::uint64_t draw_u64(std::uint64_t seed, Purpose purpose, std::uint64_t stream,
                              std::uint64_t index) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>((stream >> 32 << 4) | static_cast<std::uint32_t>(purpose)),
    };
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    const auto out = philox4x32(ctr, key);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, Purpose purpose, std::uint64_t stream,
                        std::uint64_t index) {
    return static_cast<double>(draw_u64(seed, purpose, stream, index) >> 11) * 0x1.0p-53;
}

} // namespace cgl::rng
