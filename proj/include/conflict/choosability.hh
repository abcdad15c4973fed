#ifndef CONFLICT_CHOOSABILITY_HH
#define CONFLICT_CHOOSABILITY_HH

#include <conflict/instance.hh>
#include <conflict/reductions.hh>

#include <cstdint>
#include <optional>
#include <string>

namespace conflict
{
    struct ChoosabilityOptions
    {
        int k_max = 4;
        /// Upper limit on the search effort, counted in exact-solver nodes
        /// plus enumerated partitions. Exceeding it is reported, never guessed.
        std::uint64_t work_budget = 20'000'000'000ULL;
        /// Enumerate one partition per orbit of independent per-vertex
        /// colour permutations instead of all k^(2m).
        bool symmetry_pruning = true;
        int threads = 1;
    };

    enum class ChoosabilityStatus { determined, above_k_max, budget_exceeded };

    struct ChoosabilityResult
    {
        ChoosabilityStatus status = ChoosabilityStatus::budget_exceeded;
        int value = 0;                 // the choosability when determined
        std::optional<ConflictInstance> witness;   // uncolourable partition at value - 1
        std::uint64_t partitions = 0;
        std::uint64_t work = 0;
        std::string diagnostic;
    };

    /// Partitions checked up to symmetry for a budget k: the product over
    /// vertices of the number of ways to split its edges into at most k classes.
    auto canonical_partition_count(const Multigraph & graph, int k) -> long double;

    /**
     * Conflict choosability by exhaustion: for k = 1, 2, ... every local
     * k-partition (up to per-vertex colour renaming when pruning) is decided
     * by the exact solver; the first k with no uncolourable partition is the
     * answer. Refuses a value of k whose estimated effort exceeds the budget.
     */
    auto exact_choosability(const Multigraph & graph, const ChoosabilityOptions & options = {}) -> ChoosabilityResult;

    /**
     * Whether some local k-partition defeats the graph; returns one if so.
     * nullopt with status budget_exceeded when the work budget ran out.
     */
    struct PartitionSearch
    {
        ChoosabilityStatus status;     // determined or budget_exceeded
        std::optional<ConflictInstance> hard_partition;
        std::uint64_t partitions = 0;
        std::uint64_t work = 0;
    };

    auto search_hard_partition(const Multigraph & graph, int k, const ChoosabilityOptions & options = {}) -> PartitionSearch;

    /**
     * Adaptable and separation choosability by exhaustion over edge
     * labellings. Only which edges share a label matters, together with
     * lists holding each vertex's labels plus colours used nowhere else, so
     * labellings are enumerated up to renaming with at most k labels per
     * vertex. For separation, a labelling must also be the intersection
     * pattern of its lists. Simple graphs only.
     */
    auto exact_adaptable_choosability(const Multigraph & graph, const ChoosabilityOptions & options = {}) -> ChoosabilityResult;
    auto exact_separation_choosability(const Multigraph & graph, const ChoosabilityOptions & options = {}) -> ChoosabilityResult;
}

#endif
