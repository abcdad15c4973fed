#ifndef CONFLICT_ORIENTATION_HH
#define CONFLICT_ORIENTATION_HH

#include <conflict/instance.hh>
#include <conflict/solve_result.hh>

namespace conflict
{
    struct OrientationResult
    {
        int max_outdegree;
        Orientation orientation;
    };

    /**
     * An orientation minimising the maximum outdegree. Starts from a
     * smallest-last orientation and binary searches the target, reaching each
     * target by reversing directed paths from overloaded vertices to
     * underloaded ones. A target is abandoned only when every vertex reachable
     * from an overloaded vertex is full, which certifies a subgraph denser
     * than the target.
     */
    auto solve_orientation(const Multigraph & graph) -> OrientationResult;

    auto max_outdegree(const Multigraph & graph, const Orientation & orientation) -> int;

    /// A colouring read off a minimum orientation when its outdegree is
    /// below the budget; not_applicable otherwise.
    auto solve_via_orientation(const ConflictInstance & instance) -> SolveResult;
}

#endif
