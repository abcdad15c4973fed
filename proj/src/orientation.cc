#include <conflict/orientation.hh>

#include <algorithm>
#include <deque>
#include <stdexcept>

using namespace conflict;

using std::deque;
using std::to_string;
using std::vector;

namespace
{
    auto smallest_last_orientation(const Multigraph & graph) -> Orientation
    {
        auto n = graph.vertex_count();
        Orientation head(graph.edge_count(), -1);
        vector<int> degree(n);
        int max_degree = 0;
        for (VertexId v = 0 ; v < n ; ++v) {
            degree[v] = graph.degree(v);
            max_degree = std::max(max_degree, degree[v]);
        }

        vector<vector<VertexId>> buckets(max_degree + 1);
        for (VertexId v = 0 ; v < n ; ++v)
            buckets[degree[v]].push_back(v);

        vector<char> removed(n, 0);
        int lowest = 0;
        for (int done = 0 ; done < n ; ) {
            lowest = std::max(0, lowest - 1);
            while (buckets[lowest].empty())
                ++lowest;
            auto v = buckets[lowest].back();
            buckets[lowest].pop_back();
            if (removed[v] || degree[v] != lowest)
                continue;

            removed[v] = 1;
            ++done;
            for (auto e : graph.incident(v)) {
                auto w = graph.other_end(e, v);
                if (removed[w])
                    continue;
                head[e] = w;
                buckets[--degree[w]].push_back(w);
            }
        }
        return head;
    }

    struct Reorienter
    {
        const Multigraph & graph;
        Orientation head;
        vector<int> outdegree;

        // BFS scratch
        vector<EdgeId> via;
        vector<int> seen;
        int stamp = 0;

        Reorienter(const Multigraph & g, Orientation h) :
            graph(g),
            head(std::move(h)),
            outdegree(g.vertex_count(), 0),
            via(g.vertex_count(), -1),
            seen(g.vertex_count(), 0)
        {
            for (EdgeId e = 0 ; e < graph.edge_count() ; ++e)
                ++outdegree[graph.other_end(e, head[e])];
        }

        // Reverse one path from source to a vertex below target; false if none.
        auto relieve(VertexId source, int target) -> bool
        {
            ++stamp;
            deque<VertexId> queue{ source };
            seen[source] = stamp;
            while (! queue.empty()) {
                auto x = queue.front();
                queue.pop_front();
                if (x != source && outdegree[x] < target) {
                    for (auto y = x ; y != source ; ) {
                        auto e = via[y];
                        auto tail = graph.other_end(e, y);
                        head[e] = tail;
                        --outdegree[tail];
                        ++outdegree[y];
                        y = tail;
                    }
                    return true;
                }
                for (auto e : graph.incident(x)) {
                    if (head[e] == x)
                        continue;
                    auto y = head[e];
                    if (seen[y] != stamp) {
                        seen[y] = stamp;
                        via[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            return false;
        }

        auto reach(int target) -> bool
        {
            for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
                while (outdegree[v] > target)
                    if (! relieve(v, target))
                        return false;
            return true;
        }
    };
}

auto conflict::max_outdegree(const Multigraph & graph, const Orientation & orientation) -> int
{
    vector<int> outdegree(graph.vertex_count(), 0);
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e)
        ++outdegree[graph.other_end(e, orientation[e])];
    return outdegree.empty() ? 0 : *std::max_element(outdegree.begin(), outdegree.end());
}

auto conflict::solve_orientation(const Multigraph & graph) -> OrientationResult
{
    auto best = smallest_last_orientation(graph);
    int hi = max_outdegree(graph, best);
    int lo = graph.vertex_count() == 0 ? 0 : (graph.edge_count() + graph.vertex_count() - 1) / graph.vertex_count();

    while (lo < hi) {
        auto mid = lo + (hi - lo) / 2;
        Reorienter attempt(graph, best);
        if (attempt.reach(mid)) {
            best = std::move(attempt.head);
            hi = max_outdegree(graph, best);
        }
        else
            lo = mid + 1;
    }

    return { hi, std::move(best) };
}

auto conflict::solve_via_orientation(const ConflictInstance & instance) -> SolveResult
{
    auto [k_star, orientation] = solve_orientation(instance.graph());

    SolveResult result;
    if (k_star >= instance.colours()) {
        result.verdict = Verdict::not_applicable;
        result.diagnostic = "minimum maximum outdegree " + to_string(k_star) + " is not below k = " + to_string(instance.colours());
        return result;
    }

    result.verdict = Verdict::colourable;
    result.colouring = colouring_from_orientation(instance, orientation);
    if (! validate_colouring(instance, *result.colouring).empty())
        throw std::logic_error{ "orientation route produced an invalid colouring" };
    result.diagnostic = "minimum maximum outdegree " + to_string(k_star);
    return result;
}
