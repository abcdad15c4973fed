#include <conflict/graph.hh>

#include <algorithm>
#include <utility>

using namespace conflict;

using std::pair;
using std::to_string;
using std::vector;

Multigraph::Multigraph(int n) :
    _n(n),
    _incident(n < 0 ? 0 : n)
{
    if (n < 0)
        throw InvalidInput{ "vertex count must be nonnegative, got " + to_string(n) };
}

Multigraph::Multigraph(int n, vector<Edge> edges) :
    Multigraph(n)
{
    _edges.reserve(edges.size());
    for (auto & e : edges)
        add_edge(e.u, e.v);
}

auto Multigraph::add_edge(VertexId u, VertexId v) -> EdgeId
{
    auto id = edge_count();
    if (! has_vertex(u) || ! has_vertex(v))
        throw InvalidInput{ "edge " + to_string(id) + " has an endpoint outside [0, " + to_string(_n) + ")" };
    if (u == v)
        throw InvalidInput{ "edge " + to_string(id) + " is a loop at vertex " + to_string(u) };

    _edges.push_back({ u, v });
    _incident[u].push_back(id);
    _incident[v].push_back(id);
    return id;
}

namespace
{
    auto sorted_endpoint_pairs(const Multigraph & graph) -> vector<pair<VertexId, VertexId>>
    {
        vector<pair<VertexId, VertexId>> pairs;
        pairs.reserve(graph.edge_count());
        for (auto & e : graph.edges())
            pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    }
}

auto conflict::graph_stats(const Multigraph & graph) -> GraphStats
{
    GraphStats result;
    result.n = graph.vertex_count();
    result.m = graph.edge_count();

    for (VertexId v = 0 ; v < result.n ; ++v)
        result.max_degree = std::max(result.max_degree, graph.degree(v));

    auto pairs = sorted_endpoint_pairs(graph);
    for (std::size_t i = 0 ; i < pairs.size() ; ) {
        auto j = i;
        while (j < pairs.size() && pairs[j] == pairs[i])
            ++j;
        result.max_multiplicity = std::max(result.max_multiplicity, static_cast<int>(j - i));
        i = j;
    }

    if (result.n > 0)
        result.average_degree = 2.0 * result.m / result.n;

    return result;
}

auto conflict::is_simple(const Multigraph & graph) -> bool
{
    auto pairs = sorted_endpoint_pairs(graph);
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

auto conflict::induced_subgraph(const Multigraph & graph, const vector<bool> & keep,
        vector<VertexId> * vertex_origin, vector<EdgeId> * edge_origin) -> Multigraph
{
    vector<VertexId> renumber(graph.vertex_count(), -1);
    int kept = 0;
    if (vertex_origin)
        vertex_origin->clear();
    for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
        if (keep[v]) {
            renumber[v] = kept++;
            if (vertex_origin)
                vertex_origin->push_back(v);
        }

    Multigraph result(kept);
    if (edge_origin)
        edge_origin->clear();
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
        auto & edge = graph.edge(e);
        if (keep[edge.u] && keep[edge.v]) {
            result.add_edge(renumber[edge.u], renumber[edge.v]);
            if (edge_origin)
                edge_origin->push_back(e);
        }
    }
    return result;
}
