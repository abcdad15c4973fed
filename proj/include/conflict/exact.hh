#ifndef CONFLICT_EXACT_HH
#define CONFLICT_EXACT_HH

#include <conflict/instance.hh>
#include <conflict/solve_result.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace conflict
{
    struct SearchLimits
    {
        std::optional<std::uint64_t> node_budget;
        std::optional<std::chrono::milliseconds> time_budget;

        auto validate() const -> void;
    };

    /**
     * Backtracking over vertices in descending degree order, colours
     * ascending. Colouring a vertex forbids, at each uncoloured neighbour u
     * across an edge e whose local colour matches, the colour L_u(e); a
     * neighbour with no colour left fails the branch immediately.
     *
     * The search structure is built once per graph so that many partitions of
     * the same graph can be decided without rebuilding it.
     */
    class ExactSearch
    {
        public:
            enum class Outcome { found, exhausted_search, budget_exhausted };

        private:
            struct Arc
            {
                VertexId other;
                EdgeId edge;
                bool at_u;
            };

            int _n;
            int _k;
            std::vector<Edge> _edges;
            std::vector<std::vector<Arc>> _arcs;
            std::vector<VertexId> _order;

            std::span<const LocalPair> _pairs;
            std::vector<Colour> _colour;
            std::vector<int> _forbidden;
            std::vector<int> _available;
            std::vector<VertexId> _touched;
            SearchLimits _limits;
            std::chrono::steady_clock::time_point _start;
            std::uint64_t _nodes = 0;
            bool _out_of_budget = false;

            auto search(int depth) -> bool;
            auto over_budget() -> bool;

        public:
            ExactSearch(const Multigraph & graph, int k);

            /// pairs has one entry per edge of the graph given at construction.
            auto solve(std::span<const LocalPair> pairs, const SearchLimits & limits = {}) -> Outcome;

            auto colouring() const -> const Colouring & { return _colour; }
            auto nodes() const -> std::uint64_t { return _nodes; }
    };

    auto solve_exact(const ConflictInstance & instance, const SearchLimits & limits = {}) -> SolveResult;
}

#endif
