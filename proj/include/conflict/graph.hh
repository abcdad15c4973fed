#ifndef CONFLICT_GRAPH_HH
#define CONFLICT_GRAPH_HH

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace conflict
{
    using VertexId = int;
    using EdgeId = int;
    using Colour = int;

    /// Thrown for any malformed input: bad instance data, bad files, bad lists.
    class InvalidInput : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    struct Edge
    {
        VertexId u;
        VertexId v;

        auto operator== (const Edge &) const -> bool = default;
    };

    /**
     * A loopless multigraph on vertices [0, n). Edge ids are dense and follow
     * insertion order; parallel edges are distinct edges.
     */
    class Multigraph
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<EdgeId>> _incident;

        public:
            Multigraph() = default;
            explicit Multigraph(int n);
            Multigraph(int n, std::vector<Edge> edges);

            auto add_edge(VertexId u, VertexId v) -> EdgeId;

            auto vertex_count() const -> int { return _n; }
            auto edge_count() const -> int { return static_cast<int>(_edges.size()); }

            auto edge(EdgeId e) const -> const Edge & { return _edges[e]; }
            auto edges() const -> std::span<const Edge> { return _edges; }

            auto degree(VertexId v) const -> int { return static_cast<int>(_incident[v].size()); }
            auto incident(VertexId v) const -> std::span<const EdgeId> { return _incident[v]; }

            /// The endpoint of e that is not v. v must be an endpoint.
            auto other_end(EdgeId e, VertexId v) const -> VertexId
            {
                return _edges[e].u == v ? _edges[e].v : _edges[e].u;
            }

            auto has_vertex(VertexId v) const -> bool { return v >= 0 && v < _n; }
    };

    struct GraphStats
    {
        int n = 0;
        int m = 0;
        int max_multiplicity = 0;
        int max_degree = 0;
        double average_degree = 0.0;
    };

    auto graph_stats(const Multigraph & graph) -> GraphStats;

    /// True if no two edges join the same pair of vertices.
    auto is_simple(const Multigraph & graph) -> bool;

    /// The subgraph induced by keep (vertices renumbered in increasing order).
    /// edge_origin, if given, receives the original id of every kept edge.
    auto induced_subgraph(const Multigraph & graph, const std::vector<bool> & keep,
            std::vector<VertexId> * vertex_origin = nullptr,
            std::vector<EdgeId> * edge_origin = nullptr) -> Multigraph;
}

#endif
