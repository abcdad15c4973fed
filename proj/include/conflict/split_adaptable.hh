#ifndef CONFLICT_SPLIT_ADAPTABLE_HH
#define CONFLICT_SPLIT_ADAPTABLE_HH

#include <conflict/reductions.hh>
#include <conflict/solve_result.hh>

#include <cstdint>
#include <optional>

namespace conflict
{
    struct SplitParams
    {
        int bipartition_cap = 64;
        std::uint64_t resample_cap = 10'000'000;
    };

    struct SplitReport
    {
        Verdict verdict = Verdict::failed;
        std::optional<ListColouring> colouring;
        std::string diagnostic;

        int bipartition_attempts = 0;
        int side_colours = 0;          // ceil(k / 4), the list size used on each side
        int min_low_side = 0;          // min over v of |L(v) ∩ X1|
        int min_high_side = 0;         // min over v of |L(v) ∩ X2|
        double split_threshold = 0;
        int a_size = 0;
        int b_size = 0;
        int a_max_degree = 0;
        int b_max_degree = 0;
        std::uint64_t resamples = 0;

        auto success() const -> bool { return verdict == Verdict::colourable; }
    };

    /**
     * Splits the colour universe into X1 and X2 at random, resampling until
     * every list keeps at least ceil(k/4) colours on each side. Vertices of
     * degree at least sqrt(2 mu m) are coloured from X2 and the rest from X1,
     * each side through the conflict reduction and resampling on the induced
     * subgraph. Edges across the split cannot be monochromatic.
     * Needs list size k >= 8.
     */
    auto split_adaptable(const AdaptableInstance & instance, std::uint64_t seed, const SplitParams & params = {}) -> SplitReport;
}

#endif
