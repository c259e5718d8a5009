#pragma once

#include <cstdint>

namespace backbone {

/// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based stream: the value for (seed, key) never depends on evaluation order.
constexpr std::uint64_t streamValue(std::uint64_t seed, std::uint64_t key) noexcept {
    return mix64(mix64(seed) ^ mix64(key ^ 0xD1B54A32D192ED03ull));
}

/// Maps 64 random bits onto [0, 1) with 53-bit resolution.
constexpr double toUnitInterval(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace backbone
