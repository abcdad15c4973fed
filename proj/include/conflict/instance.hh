#ifndef CONFLICT_INSTANCE_HH
#define CONFLICT_INSTANCE_HH

#include <conflict/graph.hh>

#include <utility>
#include <vector>

namespace conflict
{
    /// The forbidden pair on one edge, in the edge's stored (u, v) order.
    struct LocalPair
    {
        Colour at_u;
        Colour at_v;

        auto operator== (const LocalPair &) const -> bool = default;
    };

    /// Vertex colours, indexed by vertex, values in [1, k].
    using Colouring = std::vector<Colour>;

    /// Head endpoint per edge.
    using Orientation = std::vector<VertexId>;

    /**
     * A multigraph with a colour budget k and a local k-partition, stored as
     * one ordered pair (L_u(e), L_v(e)) per edge. Validated on construction.
     */
    class ConflictInstance
    {
        private:
            Multigraph _graph;
            int _k = 1;
            std::vector<LocalPair> _pairs;

        public:
            ConflictInstance(Multigraph graph, int k, std::vector<LocalPair> pairs);

            auto graph() const -> const Multigraph & { return _graph; }
            auto colours() const -> int { return _k; }
            auto pairs() const -> const std::vector<LocalPair> & { return _pairs; }
            auto pair(EdgeId e) const -> LocalPair { return _pairs[e]; }

            /// L_v(e). v must be an endpoint of e.
            auto local_colour(EdgeId e, VertexId v) const -> Colour
            {
                return _graph.edge(e).u == v ? _pairs[e].at_u : _pairs[e].at_v;
            }

            /// The same graph and partition under a different budget. Every
            /// stored colour must still fit.
            auto with_colours(int k) const -> ConflictInstance;
    };

    auto build_instance(int n, const std::vector<std::pair<VertexId, VertexId>> & edges, int k,
            const std::vector<LocalPair> & pairs) -> ConflictInstance;

    /**
     * Witnesses of failure. For colourings, the conflict edges. For
     * orientations, the vertices whose out-edge local colours cover [k],
     * together with those vertices' out-edges.
     */
    struct Violations
    {
        std::vector<EdgeId> edges;
        std::vector<VertexId> vertices;

        auto empty() const -> bool { return edges.empty() && vertices.empty(); }
    };

    auto validate_colouring(const ConflictInstance & instance, const Colouring & colouring) -> Violations;

    auto validate_orientation(const ConflictInstance & instance, const Orientation & orientation) -> Violations;

    /// Each vertex takes the lowest colour absent from its out-edge local colours.
    auto colouring_from_orientation(const ConflictInstance & instance, const Orientation & orientation) -> Colouring;

    /// Edges whose local colour at an endpoint matches that endpoint's colour
    /// point at it; all other edges point at their lower-id endpoint.
    auto orientation_from_colouring(const ConflictInstance & instance, const Colouring & colouring) -> Orientation;

    /// Checks size and range only.
    auto check_colouring_shape(const ConflictInstance & instance, const Colouring & colouring) -> void;
}

#endif
