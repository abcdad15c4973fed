#ifndef CONFLICT_GENERATORS_HH
#define CONFLICT_GENERATORS_HH

#include <conflict/exact.hh>
#include <conflict/instance.hh>
#include <conflict/random.hh>

#include <cstdint>
#include <optional>

namespace conflict
{
    /// Two vertices joined by k^2 edges carrying every pair of [k]^2 in
    /// lexicographic order, budget k. Not colourable.
    auto gen_two_vertex(int k) -> ConflictInstance;

    /// Centre 0 and leaves 1..mu, mu edges per leaf; the bundle to leaf i
    /// carries (i, j) for every j, budget mu. The centre has no colour left.
    auto gen_star(int mu) -> ConflictInstance;

    /// Independent uniform pair from [k]^2 on every edge.
    auto gen_random_partition(const Multigraph & graph, int k, std::uint64_t seed) -> ConflictInstance;
    auto random_partition_with(const Multigraph & graph, int k, Rng & rng) -> ConflictInstance;

    auto gen_complete_multigraph(int n, int mu) -> Multigraph;

    /**
     * A simple planar triangulation on n vertices: repeated insertion of a
     * vertex into a random face, followed by `flips` random edge flips that
     * keep the graph simple. Edges are numbered in sorted endpoint order.
     */
    auto gen_planar_triangulation(int n, std::uint64_t seed, std::optional<int> flips = std::nullopt) -> Multigraph;

    /// m edges between uniform random vertex pairs, at most mu per pair.
    auto gen_random_multigraph(int n, int m, int mu, std::uint64_t seed) -> Multigraph;

    /// Random edges between vertices of degree below max_degree, at most mu
    /// per pair, until no more fit or about n * max_degree / 2 edges exist.
    auto gen_bounded_degree_multigraph(int n, int max_degree, int mu, std::uint64_t seed) -> Multigraph;

    /**
     * Random multigraph with a few high-degree hubs. Each edge joins two
     * hubs with probability hub_pair_share, a hub and a uniform vertex with
     * probability hub_edge_share, and two uniform vertices otherwise. At
     * most mu edges per pair; vertices 0..hubs-1 are the hubs.
     */
    struct HubGraphParams
    {
        int n = 1000;
        int m = 1000;
        int mu = 1;
        int hubs = 10;
        double hub_edge_share = 0.3;
        double hub_pair_share = 0.01;
    };

    auto gen_hub_multigraph(const HubGraphParams & params, std::uint64_t seed) -> Multigraph;

    struct HardPartitionResult
    {
        enum class Status { found, none_found, budget_exhausted } status;
        std::optional<ConflictInstance> partition;
        int trials_used = 0;
    };

    /// First random partition, over `trials` draws, that the exact solver
    /// declares uncolourable.
    auto find_hard_partition(const Multigraph & graph, int k, int trials, std::uint64_t seed,
            const SearchLimits & limits = {}) -> HardPartitionResult;
}

#endif
