#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace dpso {

/// Anything the swarm can draw uniforms from. The engine is templated on
/// this so tests can substitute stubs and counting wrappers.
template <typename R>
concept UniformSource = requires(R& r) {
    { r.next_unit() } -> std::convertible_to<double>;
    { r.next_signed_unit() } -> std::convertible_to<double>;
};

/// Seedable 64-bit Mersenne Twister stream. Same seed, same sequence.
class RngStream
{
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    /// Uniform on [0, 1), 53 bits of mantissa.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1, 1], both endpoints reachable.
    double next_signed_unit()
    {
        constexpr double scale = 1.0 / static_cast<double>((std::uint64_t{1} << 53) - 1);
        return 2.0 * (static_cast<double>(engine_() >> 11) * scale) - 1.0;
    }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of stream `index` under `base`:
///   mix64(base + (index + 1) * 0x9e3779b97f4a7c15).
/// Injective in `index` for a fixed base (odd multiplier, bijective mix).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept
{
    return mix64(base + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

} // namespace dpso
