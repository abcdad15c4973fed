#ifndef CONFLICTCOL_TESTS_ORACLES_HH
#define CONFLICTCOL_TESTS_ORACLES_HH

// Brute-force reference computations. They share only the data types with
// the library and deliberately take the slowest obvious route.

#include <conflict/instance.hh>
#include <conflict/random.hh>
#include <conflict/reductions.hh>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle
{
    using namespace conflict;

    // calls visit on every vector in [1, k]^n; stops when visit returns true
    template <typename Visit_>
    auto each_assignment(int n, int k, Visit_ && visit) -> bool
    {
        std::vector<int> x(n, 1);
        while (true) {
            if (visit(x))
                return true;
            int i = 0;
            while (i < n && x[i] == k)
                x[i++] = 1;
            if (i == n)
                return false;
            ++x[i];
        }
    }

    inline auto conflicts(const ConflictInstance & inst, const Colouring & c) -> std::vector<EdgeId>
    {
        std::vector<EdgeId> bad;
        for (EdgeId e = 0 ; e < inst.graph().edge_count() ; ++e) {
            auto [u, v] = inst.graph().edge(e);
            if (c[u] == inst.pair(e).at_u && c[v] == inst.pair(e).at_v)
                bad.push_back(e);
        }
        return bad;
    }

    inline auto valid(const ConflictInstance & inst, const Colouring & c) -> bool
    {
        return conflicts(inst, c).empty();
    }

    inline auto count_colourings(const ConflictInstance & inst) -> long long
    {
        long long count = 0;
        each_assignment(inst.graph().vertex_count(), inst.colours(), [&] (auto & c) {
                if (valid(inst, c))
                    ++count;
                return false; });
        return count;
    }

    inline auto colourable(const ConflictInstance & inst) -> bool
    {
        return each_assignment(inst.graph().vertex_count(), inst.colours(), [&] (auto & c) { return valid(inst, c); });
    }

    // no vertex has out-edge local colours covering all of [k]
    inline auto orientation_ok(const ConflictInstance & inst, const Orientation & head) -> bool
    {
        auto & g = inst.graph();
        std::vector<std::set<int>> out(g.vertex_count());
        for (EdgeId e = 0 ; e < g.edge_count() ; ++e) {
            auto tail = head[e] == g.edge(e).u ? g.edge(e).v : g.edge(e).u;
            out[tail].insert(tail == g.edge(e).u ? inst.pair(e).at_u : inst.pair(e).at_v);
        }
        for (auto & s : out)
            if (static_cast<int>(s.size()) == inst.colours())
                return false;
        return true;
    }

    template <typename Visit_>
    auto each_orientation(const Multigraph & g, Visit_ && visit) -> bool
    {
        auto m = g.edge_count();
        for (std::uint64_t bits = 0 ; bits < (std::uint64_t{ 1 } << m) ; ++bits) {
            Orientation head(m);
            for (int e = 0 ; e < m ; ++e)
                head[e] = (bits >> e) & 1 ? g.edge(e).v : g.edge(e).u;
            if (visit(head))
                return true;
        }
        return false;
    }

    inline auto orientable(const ConflictInstance & inst) -> bool
    {
        return each_orientation(inst.graph(), [&] (auto & o) { return orientation_ok(inst, o); });
    }

    inline auto min_max_outdegree(const Multigraph & g) -> int
    {
        int best = g.edge_count();
        each_orientation(g, [&] (const Orientation & head) {
                std::vector<int> out(g.vertex_count(), 0);
                for (EdgeId e = 0 ; e < g.edge_count() ; ++e)
                    ++out[head[e] == g.edge(e).u ? g.edge(e).v : g.edge(e).u];
                best = std::min(best, g.vertex_count() ? *std::max_element(out.begin(), out.end()) : 0);
                return false; });
        return best;
    }

    // max over nonempty S of ceil(|E(S)| / |S|)
    inline auto max_density(const Multigraph & g) -> int
    {
        int n = g.vertex_count(), best = 0;
        for (std::uint64_t s = 1 ; s < (std::uint64_t{ 1 } << n) ; ++s) {
            int inside = 0, size = __builtin_popcountll(s);
            for (auto & e : g.edges())
                if (((s >> e.u) & 1) && ((s >> e.v) & 1))
                    ++inside;
            best = std::max(best, (inside + size - 1) / size);
        }
        return best;
    }

    // least k <= k_max with every local k-partition colourable, else k_max + 1
    inline auto choosability(const Multigraph & g, int k_max) -> int
    {
        for (int k = 1 ; k <= k_max ; ++k) {
            bool hard = each_assignment(2 * g.edge_count(), k, [&] (auto & x) {
                    std::vector<LocalPair> pairs;
                    for (EdgeId e = 0 ; e < g.edge_count() ; ++e)
                        pairs.push_back({ x[2 * e], x[2 * e + 1] });
                    return ! colourable(ConflictInstance{ g, k, pairs }); });
            if (! hard)
                return k;
        }
        return k_max + 1;
    }

    template <typename Accept_>
    auto list_colourings(const ListAssignment & lists, Accept_ && accept) -> std::set<ListColouring>
    {
        std::set<ListColouring> result;
        int n = static_cast<int>(lists.size());
        int k = n ? static_cast<int>(lists[0].size()) : 1;
        each_assignment(n, k, [&] (auto & idx) {
                ListColouring c(n);
                for (int v = 0 ; v < n ; ++v)
                    c[v] = lists[v][idx[v] - 1];
                if (accept(c))
                    result.insert(c);
                return false; });
        return result;
    }

    inline auto adapted_colourings(const AdaptableInstance & a) -> std::set<ListColouring>
    {
        return list_colourings(a.lists(), [&] (auto & c) {
                for (EdgeId e = 0 ; e < a.graph().edge_count() ; ++e) {
                    auto [u, v] = a.graph().edge(e);
                    if (c[u] == a.label(e) && c[v] == a.label(e))
                        return false;
                }
                return true; });
    }

    inline auto proper_colourings(const SeparationInstance & s) -> std::set<ListColouring>
    {
        return list_colourings(s.lists(), [&] (auto & c) {
                for (auto & e : s.graph().edges())
                    if (c[e.u] == c[e.v])
                        return false;
                return true; });
    }

    inline auto valid_colourings(const ConflictInstance & inst) -> std::set<Colouring>
    {
        std::set<Colouring> result;
        each_assignment(inst.graph().vertex_count(), inst.colours(), [&] (auto & c) {
                if (valid(inst, c))
                    result.insert(c);
                return false; });
        return result;
    }

    inline auto connected(const Multigraph & g) -> bool
    {
        int n = g.vertex_count();
        if (n == 0)
            return false;
        std::vector<int> seen(n, 0), stack{ 0 };
        seen[0] = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto e : g.incident(v))
                if (! seen[g.other_end(e, v)]) {
                    seen[g.other_end(e, v)] = 1;
                    stack.push_back(g.other_end(e, v));
                }
        }
        return std::count(seen.begin(), seen.end(), 1) == n;
    }

    // small named graphs
    inline auto path(int n) -> Multigraph
    {
        Multigraph g(n);
        for (int i = 0 ; i + 1 < n ; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    inline auto cycle(int n) -> Multigraph
    {
        auto g = path(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    inline auto complete(int n) -> Multigraph
    {
        Multigraph g(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                g.add_edge(i, j);
        return g;
    }

    inline auto random_graph(Rng & rng, int n, int m) -> Multigraph
    {
        Multigraph g(n);
        while (g.edge_count() < m && n >= 2) {
            auto u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
            if (u != v)
                g.add_edge(u, v);
        }
        return g;
    }

    inline auto random_simple_graph(Rng & rng, int n, double density) -> Multigraph
    {
        Multigraph g(n);
        std::bernoulli_distribution coin{ density };
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (coin(rng))
                    g.add_edge(i, j);
        return g;
    }

    inline auto random_instance(Rng & rng, const Multigraph & g, int k) -> ConflictInstance
    {
        std::vector<LocalPair> pairs;
        for (int e = 0 ; e < g.edge_count() ; ++e)
            pairs.push_back({ uniform_int(rng, 1, k), uniform_int(rng, 1, k) });
        return ConflictInstance{ g, k, pairs };
    }

    // k distinct colours from [1, universe]
    inline auto random_list(Rng & rng, int k, int universe) -> std::vector<int>
    {
        std::vector<int> all(universe);
        for (int i = 0 ; i < universe ; ++i)
            all[i] = i + 1;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(k);
        return all;
    }
}

#endif
