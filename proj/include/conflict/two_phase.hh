#ifndef CONFLICT_TWO_PHASE_HH
#define CONFLICT_TWO_PHASE_HH

#include <conflict/bounds.hh>
#include <conflict/instance.hh>
#include <conflict/solve_result.hh>

#include <cstdint>
#include <string_view>

namespace conflict
{
    enum class PipelineMode { paper, desk };

    auto parse_pipeline_mode(std::string_view name) -> PipelineMode;

    /// Smallest working degree scale at which paper mode runs.
    constexpr double paper_min_degree_scale = 8388608.0;   // 2^23

    /**
     * Parameters of the two-phase pipeline. for_instance derives them from
     * the instance: d and the split threshold are sqrt(2 mu m), p = 2^-4 /
     * sqrt d, both caps are sqrt d, phase A needs ceil(C sqrt d ln d) colours
     * and phase B keeps ceil(sqrt(e (2d - 1))) colours after losing at most
     * sqrt d of them to phase A.
     */
    struct TwoPhaseParams
    {
        double d = 1.0;
        double split_threshold = 1.0;
        double p = 0.0625;
        double prune_cap = 1.0;
        double b_cap = 1.0;
        int k_a = 1;
        int phase_b_colours = 1;
        int k_b = 2;
        std::uint64_t resample_cap = 10'000'000;
        int retry_cap = 32;
        PipelineMode mode = PipelineMode::desk;

        static auto for_instance(const ConflictInstance & instance, PipelineMode mode,
                const BoundConstants & constants = {}) -> TwoPhaseParams;

        /// Throws InvalidInput when the parameters cannot drive the pipeline.
        auto validate() const -> void;
    };

    struct TwoPhaseStats
    {
        int a_size = 0;
        int b_size = 0;
        int pruned_colours = 0;
        std::uint64_t phase_a_resamples = 0;
        std::uint64_t phase_b_resamples = 0;
        int max_b_clash = 0;           // worst count of B-vertex edges into A hit by phase A
        bool phase_a_conflict_free = true;
        bool b_cap_respected = true;
        int phase_b_max_degree = 0;
    };

    struct TwoPhaseResult
    {
        SolveResult result;
        TwoPhaseStats stats;           // of the successful attempt, or the last one
    };

    /**
     * Degree split at the threshold; at the high-degree side A, colours with
     * too many same-colour edges inside A are pruned, the rest are selected
     * independently with probability p and resampled until every A-vertex
     * has a selection, no edge inside A has both ends selected, and no
     * B-vertex sees more than b_cap selected colours across its edges into A.
     * Each A-vertex keeps its lowest selected colour. Every B-vertex then
     * drops the local colours clashing with A, keeps its lowest
     * phase_b_colours remaining colours, and the reduced G[B] is solved by
     * resampling. When A is empty this is exactly solve_lll.
     *
     * Throws InvalidInput if k is below k_a or k_b, or if paper mode is
     * asked for below paper_min_degree_scale.
     */
    auto two_phase(const ConflictInstance & instance, const TwoPhaseParams & params, std::uint64_t seed) -> TwoPhaseResult;
}

#endif
