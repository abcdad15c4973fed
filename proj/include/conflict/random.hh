#ifndef CONFLICT_RANDOM_HH
#define CONFLICT_RANDOM_HH

#include <cstdint>
#include <random>

namespace conflict
{
    using Rng = std::mt19937_64;

    /// Independent deterministic streams from one user seed.
    inline auto make_rng(std::uint64_t seed, std::uint64_t stream = 0) -> Rng
    {
        std::seed_seq sequence{
            static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32) };
        return Rng{ sequence };
    }

    /// Uniform in [lo, hi].
    inline auto uniform_int(Rng & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>{ lo, hi }(rng);
    }
}

#endif
