#include <conflict/peel.hh>

#include <set>
#include <stdexcept>

using namespace conflict;

using std::set;
using std::to_string;
using std::vector;

auto conflict::kernelize(const ConflictInstance & instance) -> Kernel
{
    auto & graph = instance.graph();
    auto n = graph.vertex_count();
    auto k = instance.colours();

    vector<int> degree(n);
    set<VertexId> removable;
    for (VertexId v = 0 ; v < n ; ++v) {
        degree[v] = graph.degree(v);
        if (degree[v] < k)
            removable.insert(v);
    }

    vector<bool> present(n, true);
    PeelTrace trace;
    while (! removable.empty()) {
        auto v = *removable.begin();
        removable.erase(removable.begin());
        present[v] = false;

        PeelStep step{ v, {} };
        for (auto e : graph.incident(v)) {
            auto w = graph.other_end(e, v);
            if (! present[w])
                continue;
            step.edges.push_back(e);
            if (--degree[w] < k)
                removable.insert(w);
        }
        trace.push_back(std::move(step));
    }

    vector<VertexId> core_vertices;
    vector<EdgeId> core_edges;
    auto core_graph = induced_subgraph(graph, present, &core_vertices, &core_edges);
    vector<LocalPair> core_pairs;
    core_pairs.reserve(core_edges.size());
    for (auto e : core_edges)
        core_pairs.push_back(instance.pair(e));

    return Kernel{ ConflictInstance{ std::move(core_graph), k, std::move(core_pairs) }, std::move(core_vertices), std::move(trace) };
}

auto conflict::extend_peeled(const Colouring & core_colouring, const Kernel & kernel, const ConflictInstance & instance) -> Colouring
{
    if (! validate_colouring(kernel.core, core_colouring).empty())
        throw InvalidInput{ "core colouring is not valid on the core" };

    auto & graph = instance.graph();
    auto k = instance.colours();
    Colouring result(graph.vertex_count(), 0);
    for (std::size_t i = 0 ; i < kernel.core_vertices.size() ; ++i)
        result[kernel.core_vertices[i]] = core_colouring[i];

    vector<char> forbidden(k + 1);
    for (auto step = kernel.trace.rbegin() ; step != kernel.trace.rend() ; ++step) {
        std::fill(forbidden.begin(), forbidden.end(), 0);
        auto v = step->vertex;
        for (auto e : step->edges) {
            auto u = graph.other_end(e, v);
            if (result[u] == instance.local_colour(e, u))
                forbidden[instance.local_colour(e, v)] = 1;
        }
        auto c = 1;
        while (c <= k && forbidden[c])
            ++c;
        if (c > k)
            throw std::logic_error{ "peeled vertex " + to_string(v) + " has no free colour" };
        result[v] = c;
    }

    if (! validate_colouring(instance, result).empty())
        throw std::logic_error{ "peel extension produced an invalid colouring" };
    return result;
}
