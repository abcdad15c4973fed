#include <conflict/exact.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace conflict;

using std::span;
using std::to_string;
using std::vector;

using std::chrono::steady_clock;

auto conflict::verdict_name(Verdict verdict) -> std::string_view
{
    switch (verdict) {
        case Verdict::colourable:       return "colourable";
        case Verdict::unsatisfiable:    return "unsatisfiable";
        case Verdict::budget_exhausted: return "budget-exhausted";
        case Verdict::cap_exhausted:    return "cap-exhausted";
        case Verdict::not_applicable:   return "not-applicable";
        case Verdict::failed:           return "failed";
    }
    return "unknown";
}

auto SearchLimits::validate() const -> void
{
    if (node_budget && *node_budget == 0)
        throw InvalidInput{ "node budget must be positive" };
    if (time_budget && time_budget->count() <= 0)
        throw InvalidInput{ "time budget must be positive" };
}

ExactSearch::ExactSearch(const Multigraph & graph, int k) :
    _n(graph.vertex_count()),
    _k(k),
    _edges(graph.edges().begin(), graph.edges().end()),
    _arcs(_n),
    _order(_n)
{
    if (k < 1)
        throw InvalidInput{ "colour budget must be positive" };

    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
        auto & edge = _edges[e];
        _arcs[edge.u].push_back({ edge.v, e, true });
        _arcs[edge.v].push_back({ edge.u, e, false });
    }

    std::iota(_order.begin(), _order.end(), 0);
    std::stable_sort(_order.begin(), _order.end(), [&] (VertexId a, VertexId b) {
            return _arcs[a].size() > _arcs[b].size(); });
}

auto ExactSearch::over_budget() -> bool
{
    if (_limits.node_budget && _nodes > *_limits.node_budget)
        _out_of_budget = true;
    else if (_limits.time_budget && (_nodes & 1023) == 0 && steady_clock::now() - _start > *_limits.time_budget)
        _out_of_budget = true;
    return _out_of_budget;
}

auto ExactSearch::solve(span<const LocalPair> pairs, const SearchLimits & limits) -> Outcome
{
    if (static_cast<int>(pairs.size()) != static_cast<int>(_edges.size()))
        throw InvalidInput{ "partition has " + to_string(pairs.size()) + " pairs for " + to_string(_edges.size()) + " edges" };
    limits.validate();

    _pairs = pairs;
    _limits = limits;
    _start = steady_clock::now();
    _nodes = 0;
    _out_of_budget = false;
    _colour.assign(_n, 0);
    _forbidden.assign(static_cast<std::size_t>(_n) * (_k + 1), 0);
    _available.assign(_n, _k);
    _touched.clear();

    // iterative, so deep instances do not exhaust the call stack
    vector<Colour> next(_n + 1, 1);
    vector<std::size_t> mark(_n + 1, 0);
    vector<char> assigned(_n + 1, 0);
    auto stride = static_cast<std::size_t>(_k + 1);

    auto undo = [&] (int depth) {
        auto v = _order[depth];
        while (_touched.size() > mark[depth]) {
            auto idx = static_cast<std::size_t>(_touched.back());
            _touched.pop_back();
            if (--_forbidden[idx] == 0)
                ++_available[idx / stride];
        }
        _colour[v] = 0;
        assigned[depth] = 0;
    };

    int depth = 0;
    while (true) {
        if (depth == _n)
            return Outcome::found;

        auto v = _order[depth];
        if (assigned[depth])
            undo(depth);

        auto c = next[depth];
        while (c <= _k && _forbidden[v * stride + c] != 0)
            ++c;

        if (c > _k) {
            if (depth == 0)
                return Outcome::exhausted_search;
            --depth;
            continue;
        }

        next[depth] = c + 1;
        ++_nodes;
        if (over_budget())
            return Outcome::budget_exhausted;

        _colour[v] = c;
        assigned[depth] = 1;
        mark[depth] = _touched.size();
        bool wipeout = false;
        for (auto & arc : _arcs[v]) {
            auto pair = _pairs[arc.edge];
            auto mine = arc.at_u ? pair.at_u : pair.at_v;
            if (mine != c || _colour[arc.other] != 0)
                continue;
            auto theirs = arc.at_u ? pair.at_v : pair.at_u;
            auto idx = arc.other * stride + theirs;
            _touched.push_back(static_cast<int>(idx));
            if (_forbidden[idx]++ == 0 && --_available[arc.other] == 0)
                wipeout = true;
        }

        if (! wipeout) {
            ++depth;
            next[depth] = 1;
            assigned[depth] = 0;
        }
    }
}

auto conflict::solve_exact(const ConflictInstance & instance, const SearchLimits & limits) -> SolveResult
{
    ExactSearch search(instance.graph(), instance.colours());
    SolveResult result;
    switch (search.solve(instance.pairs(), limits)) {
        case ExactSearch::Outcome::found:
            result.verdict = Verdict::colourable;
            result.colouring = search.colouring();
            if (! validate_colouring(instance, *result.colouring).empty())
                throw std::logic_error{ "exact search produced an invalid colouring" };
            break;
        case ExactSearch::Outcome::exhausted_search:
            result.verdict = Verdict::unsatisfiable;
            break;
        case ExactSearch::Outcome::budget_exhausted:
            result.verdict = Verdict::budget_exhausted;
            result.diagnostic = "search budget exhausted after " + to_string(search.nodes()) + " nodes";
            break;
    }
    result.nodes = search.nodes();
    return result;
}
