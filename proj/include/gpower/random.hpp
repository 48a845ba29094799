#pragma once

#include <cstdint>
#include <random>

namespace gpower {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for trial `trial` of cell `cell`, derived injectively from the base
/// seed so parallel campaigns never share a stream across (cell, trial) pairs.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint32_t cell,
                                        std::uint32_t trial) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(cell) << 32) | static_cast<std::uint64_t>(trial);
    return splitmix64(base ^ splitmix64(key));
}

/// Seeded random stream. All experiment-facing sampling goes through this
/// wrapper so results are reproducible bit-for-bit across platforms: uniforms
/// are built from raw engine words, never from std distribution objects.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_open01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Unbiased integer in [0, n), by rejection.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Exact Poisson(lambda) via sequential CDF inversion; large means are
    /// split additively (Poisson(a+b) = Poisson(a) + Poisson(b)) instead of
    /// using a normal approximation.
    std::uint64_t poisson(double lambda);

private:
    std::mt19937_64 engine_;
};

} // namespace gpower
