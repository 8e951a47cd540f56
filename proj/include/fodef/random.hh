#pragma once

#include <cstdint>
#include <random>

namespace fodef
{
    /// SplitMix64 finaliser. Used to derive independent per-sample seeds.
    constexpr auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Seed of the index-th stream under a base seed. Sample i of any seeded
    /// loop draws from stream_seed(seed, i), so serial and parallel runs agree.
    constexpr auto stream_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
    {
        return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    }

    /// Reproducible generator: std::mt19937_64 (fully specified by the
    /// standard) with hand-written conversions, since the standard
    /// distributions are implementation-defined.
    class Rng
    {
        std::mt19937_64 _engine;

    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform in [0, 1) with 53 bits.
        auto uniform() -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

        auto bernoulli(double p) -> bool { return uniform() < p; }

        /// Fair coin from the top bit.
        auto coin() -> bool { return (next() >> 63) != 0; }

        /// Uniform in [0, bound), by rejection.
        auto below(std::uint64_t bound) -> std::uint64_t;
    };

    inline auto Rng::below(std::uint64_t bound) -> std::uint64_t
    {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            auto x = next();
            if (x < limit)
                return x % bound;
        }
    }
}
