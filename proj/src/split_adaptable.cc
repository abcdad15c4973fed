#include <conflict/split_adaptable.hh>
#include <conflict/lll.hh>
#include <conflict/random.hh>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

using namespace conflict;

using std::to_string;
using std::unordered_map;
using std::vector;

namespace
{
    // Solves one side of the split; writes list colours into colouring.
    auto solve_side(const AdaptableInstance & instance, const vector<bool> & side, const ListAssignment & side_lists,
            Rng & rng, const SplitParams & params, ListColouring & colouring, SplitReport & report, int & max_degree) -> bool
    {
        vector<VertexId> vertices;
        vector<EdgeId> edges;
        auto sub = induced_subgraph(instance.graph(), side, &vertices, &edges);
        max_degree = graph_stats(sub).max_degree;
        if (vertices.empty())
            return true;

        ListAssignment lists;
        lists.reserve(vertices.size());
        for (auto v : vertices)
            lists.push_back(side_lists[v]);
        vector<int> labels;
        labels.reserve(edges.size());
        for (auto e : edges)
            labels.push_back(instance.label(e));

        auto reduction = adaptable_to_conflict(AdaptableInstance{ std::move(sub), std::move(lists), std::move(labels) });
        auto result = solve_lll_with(reduction.instance, rng, params.resample_cap);
        report.resamples += result.resamples;
        if (! result.success()) {
            report.verdict = result.verdict;
            report.diagnostic = result.diagnostic;
            return false;
        }

        auto decoded = reduction.decode(*result.colouring);
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            colouring[vertices[i]] = decoded[i];
        return true;
    }
}

auto conflict::split_adaptable(const AdaptableInstance & instance, std::uint64_t seed, const SplitParams & params) -> SplitReport
{
    auto & graph = instance.graph();
    auto n = graph.vertex_count();
    auto k = instance.list_size();
    if (params.bipartition_cap < 1 || params.resample_cap < 1)
        throw InvalidInput{ "caps must be positive" };

    SplitReport report;
    report.side_colours = (k + 3) / 4;
    ListColouring colouring(n, 0);
    if (graph.edge_count() == 0) {
        for (VertexId v = 0 ; v < n ; ++v)
            colouring[v] = instance.list(v).front();
        report.verdict = Verdict::colourable;
        report.colouring = colouring;
        report.b_size = n;
        return report;
    }
    if (k < 8)
        throw InvalidInput{ "split pipeline needs lists of size at least 8, got " + to_string(k) };

    auto rng = make_rng(seed);

    vector<int> universe;
    for (auto & list : instance.lists())
        universe.insert(universe.end(), list.begin(), list.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    unordered_map<int, bool> in_low;
    bool balanced = false;
    while (! balanced && report.bipartition_attempts < params.bipartition_cap) {
        ++report.bipartition_attempts;
        for (auto c : universe)
            in_low[c] = std::bernoulli_distribution{ 0.5 }(rng);

        report.min_low_side = k;
        report.min_high_side = k;
        for (auto & list : instance.lists()) {
            auto low = static_cast<int>(std::count_if(list.begin(), list.end(), [&] (int c) { return in_low[c]; }));
            report.min_low_side = std::min(report.min_low_side, low);
            report.min_high_side = std::min(report.min_high_side, k - low);
        }
        balanced = report.min_low_side >= report.side_colours && report.min_high_side >= report.side_colours;
    }
    if (! balanced) {
        report.verdict = Verdict::failed;
        report.diagnostic = "no balanced colour bipartition in " + to_string(params.bipartition_cap) + " attempts";
        return report;
    }

    auto stats = graph_stats(graph);
    report.split_threshold = std::sqrt(2.0 * stats.max_multiplicity * stats.m);
    vector<bool> high(n), low(n);
    for (VertexId v = 0 ; v < n ; ++v) {
        high[v] = graph.edge_count() > 0 && graph.degree(v) >= report.split_threshold;
        low[v] = ! high[v];
        ++(high[v] ? report.a_size : report.b_size);
    }

    // high-degree vertices draw from X2, the rest from X1; lowest colours kept
    ListAssignment side_lists(n);
    for (VertexId v = 0 ; v < n ; ++v) {
        for (auto c : instance.list(v))
            if (in_low[c] != high[v])
                side_lists[v].push_back(c);
        std::sort(side_lists[v].begin(), side_lists[v].end());
        side_lists[v].resize(report.side_colours);
    }

    if (! solve_side(instance, high, side_lists, rng, params, colouring, report, report.a_max_degree))
        return report;
    if (! solve_side(instance, low, side_lists, rng, params, colouring, report, report.b_max_degree))
        return report;

    if (! check_adapted(instance, colouring))
        throw std::logic_error{ "split pipeline produced a colouring that is not adapted" };

    report.verdict = Verdict::colourable;
    report.colouring = std::move(colouring);
    return report;
}
