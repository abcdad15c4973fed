#ifndef CONFLICT_LLL_HH
#define CONFLICT_LLL_HH

#include <conflict/instance.hh>
#include <conflict/random.hh>
#include <conflict/solve_result.hh>

#include <cstdint>

namespace conflict
{
    constexpr std::uint64_t default_resample_cap = 10'000'000;

    /**
     * Moser-Tardos resampling on the edge events "both endpoints take the
     * edge's local colours". Starts from independent uniform colours; while
     * some edge is in conflict, redraws both endpoints of the lowest-id one.
     * Gives up after cap resamplings.
     */
    auto solve_lll(const ConflictInstance & instance, std::uint64_t seed, std::uint64_t cap = default_resample_cap) -> SolveResult;

    /// As solve_lll, drawing from a caller-owned generator.
    auto solve_lll_with(const ConflictInstance & instance, Rng & rng, std::uint64_t cap) -> SolveResult;
}

#endif
