#include <conflict/generators.hh>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

using namespace conflict;

using std::array;
using std::map;
using std::optional;
using std::pair;
using std::set;
using std::to_string;
using std::unordered_map;
using std::vector;

auto conflict::gen_two_vertex(int k) -> ConflictInstance
{
    if (k < 1)
        throw InvalidInput{ "two-vertex family needs k >= 1" };

    Multigraph graph(2);
    vector<LocalPair> pairs;
    for (Colour a = 1 ; a <= k ; ++a)
        for (Colour b = 1 ; b <= k ; ++b) {
            graph.add_edge(0, 1);
            pairs.push_back({ a, b });
        }
    return ConflictInstance{ std::move(graph), k, std::move(pairs) };
}

auto conflict::gen_star(int mu) -> ConflictInstance
{
    if (mu < 1)
        throw InvalidInput{ "star family needs mu >= 1" };

    Multigraph graph(mu + 1);
    vector<LocalPair> pairs;
    for (int i = 1 ; i <= mu ; ++i)
        for (Colour j = 1 ; j <= mu ; ++j) {
            graph.add_edge(0, i);
            pairs.push_back({ i, j });
        }
    return ConflictInstance{ std::move(graph), mu, std::move(pairs) };
}

auto conflict::random_partition_with(const Multigraph & graph, int k, Rng & rng) -> ConflictInstance
{
    if (k < 1)
        throw InvalidInput{ "colour budget must be positive" };

    vector<LocalPair> pairs(graph.edge_count());
    for (auto & p : pairs) {
        p.at_u = uniform_int(rng, 1, k);
        p.at_v = uniform_int(rng, 1, k);
    }
    return ConflictInstance{ graph, k, std::move(pairs) };
}

auto conflict::gen_random_partition(const Multigraph & graph, int k, std::uint64_t seed) -> ConflictInstance
{
    auto rng = make_rng(seed);
    return random_partition_with(graph, k, rng);
}

auto conflict::gen_complete_multigraph(int n, int mu) -> Multigraph
{
    if (n < 1 || mu < 1)
        throw InvalidInput{ "complete multigraph needs n >= 1 and mu >= 1" };

    Multigraph graph(n);
    for (VertexId u = 0 ; u < n ; ++u)
        for (VertexId v = u + 1 ; v < n ; ++v)
            for (int i = 0 ; i < mu ; ++i)
                graph.add_edge(u, v);
    return graph;
}

namespace
{
    using VertexPair = pair<VertexId, VertexId>;

    auto ordered(VertexId a, VertexId b) -> VertexPair
    {
        return { std::min(a, b), std::max(a, b) };
    }

    class Triangulation
    {
        private:
            vector<array<VertexId, 3>> _faces;
            map<VertexPair, vector<int>> _edge_faces;

            auto attach(int f) -> void
            {
                auto & t = _faces[f];
                for (int i = 0 ; i < 3 ; ++i)
                    _edge_faces[ordered(t[i], t[(i + 1) % 3])].push_back(f);
            }

            auto detach(int f) -> void
            {
                auto & t = _faces[f];
                for (int i = 0 ; i < 3 ; ++i) {
                    auto & list = _edge_faces[ordered(t[i], t[(i + 1) % 3])];
                    list.erase(std::find(list.begin(), list.end(), f));
                }
            }

        public:
            Triangulation()
            {
                // inner and outer face of a triangle
                _faces = { { 0, 1, 2 }, { 0, 1, 2 } };
                attach(0);
                attach(1);
            }

            auto insert(VertexId x, Rng & rng) -> void
            {
                auto f = uniform_int(rng, 0, static_cast<int>(_faces.size()) - 1);
                auto [a, b, c] = _faces[f];
                detach(f);
                _faces[f] = { a, b, x };
                attach(f);
                _faces.push_back({ b, c, x });
                attach(static_cast<int>(_faces.size()) - 1);
                _faces.push_back({ c, a, x });
                attach(static_cast<int>(_faces.size()) - 1);
            }

            auto flip(Rng & rng) -> void
            {
                auto pick = uniform_int(rng, 0, static_cast<int>(_edge_faces.size()) - 1);
                auto it = std::next(_edge_faces.begin(), pick);
                auto [a, b] = it->first;
                auto f1 = it->second[0], f2 = it->second[1];

                auto apex = [&] (int f) {
                    for (auto v : _faces[f])
                        if (v != a && v != b)
                            return v;
                    return -1;
                };
                auto c = apex(f1), d = apex(f2);
                if (c == d || _edge_faces.count(ordered(c, d)))
                    return;

                detach(f1);
                detach(f2);
                _edge_faces.erase(ordered(a, b));
                _faces[f1] = { a, c, d };
                _faces[f2] = { b, d, c };
                attach(f1);
                attach(f2);
            }

            auto edges() const -> vector<VertexPair>
            {
                vector<VertexPair> result;
                for (auto & [e, faces] : _edge_faces)
                    result.push_back(e);
                return result;
            }
    };
}

auto conflict::gen_planar_triangulation(int n, std::uint64_t seed, optional<int> flips) -> Multigraph
{
    if (n < 3)
        throw InvalidInput{ "a triangulation needs n >= 3, got " + to_string(n) };

    auto rng = make_rng(seed);
    Triangulation t;
    for (VertexId x = 3 ; x < n ; ++x)
        t.insert(x, rng);
    for (int i = 0, count = flips.value_or(n) ; i < count ; ++i)
        t.flip(rng);

    Multigraph graph(n);
    for (auto & [u, v] : t.edges())
        graph.add_edge(u, v);
    return graph;
}

namespace
{
    struct PairHash
    {
        auto operator() (const VertexPair & p) const -> std::size_t
        {
            return std::hash<long long>{}((static_cast<long long>(p.first) << 32) ^ static_cast<unsigned>(p.second));
        }
    };

    class CappedBuilder
    {
        private:
            Multigraph _graph;
            int _mu;
            unordered_map<VertexPair, int, PairHash> _count;

        public:
            CappedBuilder(int n, int mu) : _graph(n), _mu(mu) { }

            auto try_add(VertexId u, VertexId v) -> bool
            {
                if (u == v)
                    return false;
                auto & c = _count[ordered(u, v)];
                if (c >= _mu)
                    return false;
                ++c;
                _graph.add_edge(u, v);
                return true;
            }

            auto graph() -> Multigraph & { return _graph; }
    };

    auto check_sizes(int n, int mu) -> void
    {
        if (n < 2)
            throw InvalidInput{ "random graphs need n >= 2" };
        if (mu < 1)
            throw InvalidInput{ "multiplicity cap must be positive" };
    }
}

auto conflict::gen_random_multigraph(int n, int m, int mu, std::uint64_t seed) -> Multigraph
{
    check_sizes(n, mu);
    if (static_cast<long long>(m) > static_cast<long long>(mu) * n * (n - 1) / 2)
        throw InvalidInput{ "cannot place " + to_string(m) + " edges with multiplicity at most " + to_string(mu) };

    auto rng = make_rng(seed);
    CappedBuilder builder(n, mu);
    while (builder.graph().edge_count() < m)
        builder.try_add(uniform_int(rng, 0, n - 1), uniform_int(rng, 0, n - 1));
    return std::move(builder.graph());
}

auto conflict::gen_bounded_degree_multigraph(int n, int max_degree, int mu, std::uint64_t seed) -> Multigraph
{
    check_sizes(n, mu);
    if (max_degree < 1)
        throw InvalidInput{ "degree cap must be positive" };

    auto rng = make_rng(seed);
    CappedBuilder builder(n, mu);
    vector<VertexId> open(n);
    for (VertexId v = 0 ; v < n ; ++v)
        open[v] = v;

    auto target = static_cast<long long>(n) * max_degree / 2;
    int failures = 0;
    while (builder.graph().edge_count() < target && open.size() >= 2 && failures < 100 * n) {
        auto i = uniform_int(rng, 0, static_cast<int>(open.size()) - 1);
        auto j = uniform_int(rng, 0, static_cast<int>(open.size()) - 1);
        auto u = open[i], v = open[j];
        if (! builder.try_add(u, v)) {
            ++failures;
            continue;
        }
        auto & g = builder.graph();
        for (auto w : { std::max(i, j), std::min(i, j) })
            if (g.degree(open[w]) >= max_degree) {
                open[w] = open.back();
                open.pop_back();
            }
    }
    return std::move(builder.graph());
}

auto conflict::gen_hub_multigraph(const HubGraphParams & params, std::uint64_t seed) -> Multigraph
{
    check_sizes(params.n, params.mu);
    if (params.hubs < 2 || params.hubs >= params.n)
        throw InvalidInput{ "hub count must lie in [2, n)" };
    if (params.hub_edge_share < 0 || params.hub_pair_share < 0 || params.hub_edge_share + params.hub_pair_share > 1)
        throw InvalidInput{ "hub shares must be nonnegative and sum to at most 1" };

    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> unit{ 0.0, 1.0 };
    CappedBuilder builder(params.n, params.mu);
    long long failures = 0;
    while (builder.graph().edge_count() < params.m) {
        auto r = unit(rng);
        VertexId u, v;
        if (r < params.hub_pair_share) {
            u = uniform_int(rng, 0, params.hubs - 1);
            v = uniform_int(rng, 0, params.hubs - 1);
        }
        else if (r < params.hub_pair_share + params.hub_edge_share) {
            u = uniform_int(rng, 0, params.hubs - 1);
            v = uniform_int(rng, params.hubs, params.n - 1);
        }
        else {
            u = uniform_int(rng, 0, params.n - 1);
            v = uniform_int(rng, 0, params.n - 1);
        }
        if (! builder.try_add(u, v) && ++failures > 1000LL * params.m)
            throw InvalidInput{ "hub graph parameters leave no room for " + to_string(params.m) + " edges" };
    }
    return std::move(builder.graph());
}

auto conflict::find_hard_partition(const Multigraph & graph, int k, int trials, std::uint64_t seed,
        const SearchLimits & limits) -> HardPartitionResult
{
    if (trials < 0)
        throw InvalidInput{ "trial count must be nonnegative" };

    HardPartitionResult result{ HardPartitionResult::Status::none_found, std::nullopt, 0 };
    ExactSearch search(graph, k);
    for (int t = 0 ; t < trials ; ++t) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(t));
        auto candidate = random_partition_with(graph, k, rng);
        result.trials_used = t + 1;
        auto outcome = search.solve(candidate.pairs(), limits);
        if (outcome == ExactSearch::Outcome::budget_exhausted) {
            result.status = HardPartitionResult::Status::budget_exhausted;
            return result;
        }
        if (outcome == ExactSearch::Outcome::exhausted_search) {
            result.status = HardPartitionResult::Status::found;
            result.partition = std::move(candidate);
            return result;
        }
    }
    return result;
}
