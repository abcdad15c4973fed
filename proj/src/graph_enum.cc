#include <conflict/graph_enum.hh>
#include <conflict/generators.hh>

#include <algorithm>
#include <map>
#include <set>

using namespace conflict;

using std::map;
using std::set;
using std::to_string;
using std::vector;

auto conflict::pair_bit(int i, int j) -> int
{
    if (i > j)
        std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

auto conflict::mask_of(const Multigraph & graph) -> AdjacencyMask
{
    if (graph.vertex_count() > 8)
        throw InvalidInput{ "adjacency masks cover at most 8 vertices" };
    AdjacencyMask mask = 0;
    for (auto & e : graph.edges())
        mask |= AdjacencyMask{ 1 } << pair_bit(e.u, e.v);
    return mask;
}

auto conflict::graph_of(int n, AdjacencyMask mask) -> Multigraph
{
    Multigraph graph(n);
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i)
            if (mask & (AdjacencyMask{ 1 } << pair_bit(i, j)))
                graph.add_edge(i, j);
    return graph;
}

namespace
{
    auto adjacent(AdjacencyMask mask, int i, int j) -> bool
    {
        return i != j && (mask & (AdjacencyMask{ 1 } << pair_bit(i, j)));
    }

    // colour refinement; classes numbered in an isomorphism-invariant order
    auto refine(int n, AdjacencyMask mask) -> vector<int>
    {
        vector<int> colour(n, 0);
        int classes = 1;
        while (true) {
            map<vector<int>, vector<int>> signatures;
            for (int v = 0 ; v < n ; ++v) {
                vector<int> signature{ colour[v] };
                vector<int> around;
                for (int w = 0 ; w < n ; ++w)
                    if (adjacent(mask, v, w))
                        around.push_back(colour[w]);
                std::sort(around.begin(), around.end());
                signature.insert(signature.end(), around.begin(), around.end());
                signatures[signature].push_back(v);
            }

            int next = 0;
            for (auto & [signature, members] : signatures) {
                for (auto v : members)
                    colour[v] = next;
                ++next;
            }
            if (next == classes)
                return colour;
            classes = next;
        }
    }
}

auto conflict::canonical_mask(int n, AdjacencyMask mask) -> AdjacencyMask
{
    if (n > 8)
        throw InvalidInput{ "adjacency masks cover at most 8 vertices" };

    auto colour = refine(n, mask);
    vector<int> order(n);
    for (int v = 0 ; v < n ; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&] (int a, int b) {
            return colour[a] != colour[b] ? colour[a] < colour[b] : a < b; });

    vector<std::pair<int, int>> blocks;
    for (int i = 0 ; i < n ; ) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    vector<int> label(n);
    auto best = ~AdjacencyMask{ 0 };
    while (true) {
        for (int pos = 0 ; pos < n ; ++pos)
            label[order[pos]] = pos;
        AdjacencyMask relabelled = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                if (adjacent(mask, i, j))
                    relabelled |= AdjacencyMask{ 1 } << pair_bit(label[i], label[j]);
        best = std::min(best, relabelled);

        int b = static_cast<int>(blocks.size()) - 1;
        for ( ; b >= 0 ; --b)
            if (std::next_permutation(order.begin() + blocks[b].first, order.begin() + blocks[b].second))
                break;
        if (b < 0)
            return best;
    }
}

auto conflict::all_graphs(int n) -> vector<Multigraph>
{
    if (n < 0 || n > 6)
        throw InvalidInput{ "graph enumeration covers 0 <= n <= 6" };

    set<AdjacencyMask> seen;
    auto pairs = n * (n - 1) / 2;
    for (AdjacencyMask mask = 0 ; mask < (AdjacencyMask{ 1 } << pairs) ; ++mask)
        seen.insert(canonical_mask(n, mask));

    vector<Multigraph> result;
    for (auto mask : seen)
        result.push_back(graph_of(n, mask));
    return result;
}

auto conflict::all_triangulations(int n) -> vector<Multigraph>
{
    if (n < 3 || n > 8)
        throw InvalidInput{ "triangulation enumeration covers 3 <= n <= 8" };

    set<AdjacencyMask> seen;
    for (std::uint64_t seed = 0 ; seed < 4000 ; ++seed) {
        auto flips = static_cast<int>(seed % (4 * n));
        seen.insert(canonical_mask(n, mask_of(gen_planar_triangulation(n, seed, flips))));
    }

    vector<Multigraph> result;
    for (auto mask : seen)
        result.push_back(graph_of(n, mask));
    return result;
}

auto conflict::all_planar_graphs(int n) -> vector<Multigraph>
{
    if (n < 0 || n > 7)
        throw InvalidInput{ "planar graph enumeration covers 0 <= n <= 7" };
    if (n < 3)
        return all_graphs(n);

    set<AdjacencyMask> seen;
    for (auto & t : all_triangulations(n)) {
        auto full = mask_of(t);
        // every submask of the triangulation's edge set
        for (AdjacencyMask sub = full ; ; sub = (sub - 1) & full) {
            seen.insert(canonical_mask(n, sub));
            if (sub == 0)
                break;
        }
    }

    vector<Multigraph> result;
    for (auto mask : seen)
        result.push_back(graph_of(n, mask));
    return result;
}
