#include <conflict/reductions.hh>

#include <algorithm>
#include <set>
#include <utility>

using namespace conflict;

using std::optional;
using std::set;
using std::to_string;
using std::vector;

namespace
{
    auto check_lists(const Multigraph & graph, const ListAssignment & lists) -> int
    {
        if (static_cast<int>(lists.size()) != graph.vertex_count())
            throw InvalidInput{ "got " + to_string(lists.size()) + " lists for " + to_string(graph.vertex_count()) + " vertices" };
        if (lists.empty())
            return 0;

        auto k = static_cast<int>(lists.front().size());
        if (k < 1)
            throw InvalidInput{ "lists must be nonempty" };
        for (VertexId v = 0 ; v < graph.vertex_count() ; ++v) {
            auto & list = lists[v];
            if (static_cast<int>(list.size()) != k)
                throw InvalidInput{ "list of vertex " + to_string(v) + " has size " + to_string(list.size())
                    + ", expected " + to_string(k) };
            set<int> seen;
            for (auto c : list) {
                if (c < 1)
                    throw InvalidInput{ "list of vertex " + to_string(v) + " holds nonpositive colour " + to_string(c) };
                if (! seen.insert(c).second)
                    throw InvalidInput{ "list of vertex " + to_string(v) + " repeats colour " + to_string(c) };
            }
        }
        return k;
    }

    // 1-based position of c in list, or nullopt
    auto position(const vector<int> & list, int c) -> optional<Colour>
    {
        auto it = std::find(list.begin(), list.end(), c);
        if (it == list.end())
            return std::nullopt;
        return static_cast<Colour>(it - list.begin()) + 1;
    }

    auto check_list_colouring(const Multigraph & graph, const ListAssignment & lists, const ListColouring & colouring) -> void
    {
        if (static_cast<int>(colouring.size()) != graph.vertex_count())
            throw InvalidInput{ "list colouring has " + to_string(colouring.size()) + " entries for "
                + to_string(graph.vertex_count()) + " vertices" };
        for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
            if (! position(lists[v], colouring[v]))
                throw InvalidInput{ "vertex " + to_string(v) + " has colour " + to_string(colouring[v]) + " outside its list" };
    }

    // Instance over the same vertices with one edge per constrained source edge.
    auto reduce(const Multigraph & graph, const ListAssignment & lists, int k,
            const vector<optional<int>> & shared_colour) -> ListReduction
    {
        Multigraph reduced(graph.vertex_count());
        vector<LocalPair> pairs;
        vector<EdgeId> origin;
        for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
            if (! shared_colour[e])
                continue;
            auto & edge = graph.edge(e);
            auto at_u = position(lists[edge.u], *shared_colour[e]);
            auto at_v = position(lists[edge.v], *shared_colour[e]);
            if (! at_u || ! at_v)
                continue;
            reduced.add_edge(edge.u, edge.v);
            pairs.push_back({ *at_u, *at_v });
            origin.push_back(e);
        }

        return ListReduction{ ConflictInstance{ std::move(reduced), std::max(k, 1), std::move(pairs) }, lists, std::move(origin) };
    }
}

AdaptableInstance::AdaptableInstance(Multigraph graph, ListAssignment lists, vector<int> labels) :
    _graph(std::move(graph)),
    _lists(std::move(lists)),
    _labels(std::move(labels))
{
    _k = check_lists(_graph, _lists);
    if (static_cast<int>(_labels.size()) != _graph.edge_count())
        throw InvalidInput{ "got " + to_string(_labels.size()) + " labels for " + to_string(_graph.edge_count()) + " edges" };
    for (EdgeId e = 0 ; e < _graph.edge_count() ; ++e)
        if (_labels[e] < 1)
            throw InvalidInput{ "edge " + to_string(e) + " has nonpositive label " + to_string(_labels[e]) };
}

SeparationInstance::SeparationInstance(Multigraph graph, ListAssignment lists) :
    _graph(std::move(graph)),
    _lists(std::move(lists))
{
    _k = check_lists(_graph, _lists);
    if (! is_simple(_graph))
        throw InvalidInput{ "separation instances need a simple graph" };
}

auto ListReduction::decode(const Colouring & colouring) const -> ListColouring
{
    check_colouring_shape(instance, colouring);
    ListColouring result(colouring.size());
    for (std::size_t v = 0 ; v < colouring.size() ; ++v)
        result[v] = lists[v][colouring[v] - 1];
    return result;
}

auto ListReduction::encode(const ListColouring & colouring) const -> Colouring
{
    check_list_colouring(instance.graph(), lists, colouring);
    Colouring result(colouring.size());
    for (std::size_t v = 0 ; v < colouring.size() ; ++v)
        result[v] = *position(lists[v], colouring[v]);
    return result;
}

auto conflict::conflict_lists_to_instance(const ConflictListAssignment & assignment) -> ConflictInstance
{
    auto & graph = assignment.graph;
    if (! is_simple(graph))
        throw InvalidInput{ "conflict lists need a simple underlying graph" };
    if (static_cast<int>(assignment.conflicts.size()) != graph.edge_count())
        throw InvalidInput{ "got " + to_string(assignment.conflicts.size()) + " conflict lists for "
            + to_string(graph.edge_count()) + " edges" };

    Multigraph result(graph.vertex_count());
    vector<LocalPair> pairs;
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
        auto & list = assignment.conflicts[e];
        if (assignment.multiplicity_bound && static_cast<int>(list.size()) > *assignment.multiplicity_bound)
            throw InvalidInput{ "edge " + to_string(e) + " has " + to_string(list.size()) + " conflicts, above the bound "
                + to_string(*assignment.multiplicity_bound) };
        for (std::size_t i = 0 ; i < list.size() ; ++i) {
            for (std::size_t j = 0 ; j < i ; ++j)
                if (list[j] == list[i])
                    throw InvalidInput{ "edge " + to_string(e) + " lists conflict (" + to_string(list[i].at_u) + ", "
                        + to_string(list[i].at_v) + ") twice" };
            result.add_edge(graph.edge(e).u, graph.edge(e).v);
            pairs.push_back(list[i]);
        }
    }

    return ConflictInstance{ std::move(result), assignment.k, std::move(pairs) };
}

auto conflict::adaptable_to_conflict(const AdaptableInstance & instance) -> ListReduction
{
    vector<optional<int>> shared(instance.graph().edge_count());
    for (EdgeId e = 0 ; e < instance.graph().edge_count() ; ++e)
        shared[e] = instance.label(e);
    return reduce(instance.graph(), instance.lists(), instance.list_size(), shared);
}

auto conflict::separation_to_conflict(const SeparationInstance & instance) -> ListReduction
{
    auto & graph = instance.graph();
    vector<optional<int>> shared(graph.edge_count());
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
        auto & edge = graph.edge(e);
        for (auto c : instance.list(edge.u))
            if (position(instance.list(edge.v), c)) {
                if (shared[e])
                    throw InvalidInput{ "edge " + to_string(e) + " between " + to_string(edge.u) + " and "
                        + to_string(edge.v) + " violates maximum separation" };
                shared[e] = c;
            }
    }
    return reduce(graph, instance.lists(), instance.list_size(), shared);
}

auto conflict::check_adapted(const AdaptableInstance & instance, const ListColouring & colouring) -> bool
{
    auto & graph = instance.graph();
    check_list_colouring(graph, instance.lists(), colouring);
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
        auto & edge = graph.edge(e);
        if (colouring[edge.u] == colouring[edge.v] && colouring[edge.u] == instance.label(e))
            return false;
    }
    return true;
}

auto conflict::check_separation(const SeparationInstance & instance) -> bool
{
    auto & graph = instance.graph();
    for (auto & edge : graph.edges()) {
        int common = 0;
        for (auto c : instance.list(edge.u))
            if (position(instance.list(edge.v), c))
                ++common;
        if (common > 1)
            return false;
    }
    return true;
}

auto conflict::check_proper_list_colouring(const SeparationInstance & instance, const ListColouring & colouring) -> bool
{
    auto & graph = instance.graph();
    check_list_colouring(graph, instance.lists(), colouring);
    return std::none_of(graph.edges().begin(), graph.edges().end(),
            [&] (const Edge & e) { return colouring[e.u] == colouring[e.v]; });
}
