#include <conflict/instance.hh>

#include <algorithm>

using namespace conflict;

using std::pair;
using std::to_string;
using std::vector;

ConflictInstance::ConflictInstance(Multigraph graph, int k, vector<LocalPair> pairs) :
    _graph(std::move(graph)),
    _k(k),
    _pairs(std::move(pairs))
{
    if (_k < 1)
        throw InvalidInput{ "colour budget must be positive, got " + to_string(_k) };
    if (static_cast<int>(_pairs.size()) != _graph.edge_count())
        throw InvalidInput{ "got " + to_string(_pairs.size()) + " colour pairs for " + to_string(_graph.edge_count()) + " edges" };

    for (EdgeId e = 0 ; e < _graph.edge_count() ; ++e) {
        auto [a, b] = _pairs[e];
        if (a < 1 || a > _k || b < 1 || b > _k)
            throw InvalidInput{ "edge " + to_string(e) + " has colour pair (" + to_string(a) + ", " + to_string(b)
                + ") outside [1, " + to_string(_k) + "]" };
    }
}

auto ConflictInstance::with_colours(int k) const -> ConflictInstance
{
    return ConflictInstance{ _graph, k, _pairs };
}

auto conflict::build_instance(int n, const vector<pair<VertexId, VertexId>> & edges, int k,
        const vector<LocalPair> & pairs) -> ConflictInstance
{
    if (edges.size() != pairs.size())
        throw InvalidInput{ "got " + to_string(edges.size()) + " edges but " + to_string(pairs.size()) + " colour pairs" };

    Multigraph graph(n);
    for (auto & [u, v] : edges)
        graph.add_edge(u, v);

    return ConflictInstance{ std::move(graph), k, pairs };
}

auto conflict::check_colouring_shape(const ConflictInstance & instance, const Colouring & colouring) -> void
{
    auto n = instance.graph().vertex_count();
    if (static_cast<int>(colouring.size()) != n)
        throw InvalidInput{ "colouring has " + to_string(colouring.size()) + " entries for " + to_string(n) + " vertices" };
    for (VertexId v = 0 ; v < n ; ++v)
        if (colouring[v] < 1 || colouring[v] > instance.colours())
            throw InvalidInput{ "vertex " + to_string(v) + " has colour " + to_string(colouring[v])
                + " outside [1, " + to_string(instance.colours()) + "]" };
}

auto conflict::validate_colouring(const ConflictInstance & instance, const Colouring & colouring) -> Violations
{
    check_colouring_shape(instance, colouring);

    Violations result;
    auto & graph = instance.graph();
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
        auto & edge = graph.edge(e);
        auto pair = instance.pair(e);
        if (colouring[edge.u] == pair.at_u && colouring[edge.v] == pair.at_v)
            result.edges.push_back(e);
    }
    return result;
}

namespace
{
    auto check_orientation_shape(const ConflictInstance & instance, const Orientation & orientation) -> void
    {
        auto & graph = instance.graph();
        if (static_cast<int>(orientation.size()) != graph.edge_count())
            throw InvalidInput{ "orientation has " + to_string(orientation.size()) + " entries for "
                + to_string(graph.edge_count()) + " edges" };
        for (EdgeId e = 0 ; e < graph.edge_count() ; ++e)
            if (orientation[e] != graph.edge(e).u && orientation[e] != graph.edge(e).v)
                throw InvalidInput{ "head of edge " + to_string(e) + " is vertex " + to_string(orientation[e])
                    + ", which is not an endpoint" };
    }

    // present[c] for c in [1, k]: whether some out-edge of v has local colour c
    auto out_colours(const ConflictInstance & instance, const Orientation & orientation, VertexId v,
            vector<char> & present) -> int
    {
        std::fill(present.begin(), present.end(), 0);
        int distinct = 0;
        for (auto e : instance.graph().incident(v))
            if (orientation[e] != v) {
                auto c = instance.local_colour(e, v);
                if (! present[c]) {
                    present[c] = 1;
                    ++distinct;
                }
            }
        return distinct;
    }
}

auto conflict::validate_orientation(const ConflictInstance & instance, const Orientation & orientation) -> Violations
{
    check_orientation_shape(instance, orientation);

    Violations result;
    auto & graph = instance.graph();
    vector<char> present(instance.colours() + 1);
    for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
        if (out_colours(instance, orientation, v, present) == instance.colours()) {
            result.vertices.push_back(v);
            for (auto e : graph.incident(v))
                if (orientation[e] != v)
                    result.edges.push_back(e);
        }
    return result;
}

auto conflict::colouring_from_orientation(const ConflictInstance & instance, const Orientation & orientation) -> Colouring
{
    if (! validate_orientation(instance, orientation).empty())
        throw InvalidInput{ "cannot build a colouring from an invalid orientation" };

    auto & graph = instance.graph();
    Colouring result(graph.vertex_count(), 1);
    vector<char> present(instance.colours() + 1);
    for (VertexId v = 0 ; v < graph.vertex_count() ; ++v) {
        out_colours(instance, orientation, v, present);
        auto c = 1;
        while (present[c])
            ++c;
        result[v] = c;
    }
    return result;
}

auto conflict::orientation_from_colouring(const ConflictInstance & instance, const Colouring & colouring) -> Orientation
{
    if (! validate_colouring(instance, colouring).empty())
        throw InvalidInput{ "cannot build an orientation from an invalid colouring" };

    auto & graph = instance.graph();
    Orientation result(graph.edge_count());
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
        auto & edge = graph.edge(e);
        auto pair = instance.pair(e);
        if (colouring[edge.u] == pair.at_u)
            result[e] = edge.u;
        else if (colouring[edge.v] == pair.at_v)
            result[e] = edge.v;
        else
            result[e] = std::min(edge.u, edge.v);
    }
    return result;
}
