#ifndef CONFLICT_PEEL_HH
#define CONFLICT_PEEL_HH

#include <conflict/instance.hh>

#include <vector>

namespace conflict
{
    struct PeelStep
    {
        VertexId vertex;
        std::vector<EdgeId> edges;     // edges to vertices still present at removal
    };

    using PeelTrace = std::vector<PeelStep>;

    struct Kernel
    {
        ConflictInstance core;
        std::vector<VertexId> core_vertices;   // core vertex i is original vertex core_vertices[i]
        PeelTrace trace;
    };

    /// Repeatedly removes the lowest-id vertex of current degree below k.
    auto kernelize(const ConflictInstance & instance) -> Kernel;

    /**
     * Colours the peeled vertices in reverse removal order. Each has fewer
     * than k edges back into the coloured part and each edge forbids at most
     * one colour, so the lowest free colour always exists. Core colours are
     * kept as given.
     */
    auto extend_peeled(const Colouring & core_colouring, const Kernel & kernel, const ConflictInstance & instance) -> Colouring;
}

#endif
