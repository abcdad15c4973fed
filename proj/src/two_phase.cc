#include <conflict/two_phase.hh>
#include <conflict/lll.hh>
#include <conflict/random.hh>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

using namespace conflict;

using std::set;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

auto conflict::parse_pipeline_mode(string_view name) -> PipelineMode
{
    if (name == "paper")
        return PipelineMode::paper;
    if (name == "desk")
        return PipelineMode::desk;
    throw InvalidInput{ "unknown pipeline mode '" + string{ name } + "', expected paper or desk" };
}

auto TwoPhaseParams::for_instance(const ConflictInstance & instance, PipelineMode mode, const BoundConstants & constants) -> TwoPhaseParams
{
    constants.validate();
    auto stats = graph_stats(instance.graph());

    TwoPhaseParams params;
    params.mode = mode;
    params.split_threshold = std::sqrt(2.0 * stats.max_multiplicity * stats.m);
    params.d = std::max(1.0, params.split_threshold);
    auto root = std::sqrt(params.d);
    params.p = 1.0 / (16.0 * root);
    params.prune_cap = root;
    params.b_cap = root;
    params.k_a = static_cast<int>(std::max(1LL, robust_ceil(constants.lemma * root * std::log(params.d))));
    params.phase_b_colours = static_cast<int>(robust_ceil(std::sqrt(std::numbers::e * (2 * params.d - 1))));
    params.k_b = params.phase_b_colours + static_cast<int>(robust_ceil(root));
    params.retry_cap = mode == PipelineMode::desk ? 32 : 1;
    return params;
}

auto TwoPhaseParams::validate() const -> void
{
    if (! (d >= 1))
        throw InvalidInput{ "degree scale must be at least 1" };
    if (! (p > 0 && p < 1))
        throw InvalidInput{ "selection probability must lie in (0, 1)" };
    if (! (prune_cap > 0 && b_cap > 0))
        throw InvalidInput{ "caps must be positive" };
    if (k_a < 1 || phase_b_colours < 1 || k_b < phase_b_colours + static_cast<int>(std::floor(b_cap)))
        throw InvalidInput{ "phase B needs k_b >= phase_b_colours + floor(b_cap)" };
    if (resample_cap < 1 || retry_cap < 1)
        throw InvalidInput{ "resample and retry caps must be positive" };
    if (mode == PipelineMode::paper && d < paper_min_degree_scale)
        throw InvalidInput{ "paper mode needs d >= 2^23, got d = " + to_string(d) };
}

namespace
{
    struct Attempt
    {
        SolveResult result;
        TwoPhaseStats stats;
    };

    class PhaseA
    {
        private:
            const ConflictInstance & _instance;
            const Multigraph & _graph;
            const TwoPhaseParams & _params;
            const vector<char> & _in_a;
            int _k;

            vector<int> _a_index;              // vertex -> index in A, or -1
            vector<VertexId> _a_vertices;
            vector<char> _pruned;              // [a * (k+1) + c]
            vector<char> _selected;            // [a * (k+1) + c]
            vector<int> _selected_count;       // per A index
            vector<int> _clash;                // per vertex, meaningful for B
            vector<vector<EdgeId>> _group;     // [a * (k+1) + c]: edges at a with local colour c

            set<int> _uncoloured;              // A indices with nothing selected
            set<EdgeId> _edge_conflicts;       // edges inside A with both ends selected
            set<VertexId> _overloaded;         // B vertices over b_cap

            auto slot(int a, Colour c) const -> std::size_t { return static_cast<std::size_t>(a) * (_k + 1) + c; }

            auto edge_live(EdgeId e) const -> bool
            {
                auto & edge = _graph.edge(e);
                if (! _in_a[edge.u] || ! _in_a[edge.v])
                    return false;
                auto p = _instance.pair(e);
                return ! _pruned[slot(_a_index[edge.u], p.at_u)] && ! _pruned[slot(_a_index[edge.v], p.at_v)];
            }

            auto edge_in_conflict(EdgeId e) const -> bool
            {
                auto & edge = _graph.edge(e);
                auto p = _instance.pair(e);
                return _selected[slot(_a_index[edge.u], p.at_u)] && _selected[slot(_a_index[edge.v], p.at_v)];
            }

            auto refresh_overload(VertexId x) -> void
            {
                if (_clash[x] > _params.b_cap)
                    _overloaded.insert(x);
                else
                    _overloaded.erase(x);
            }

            auto set_variable(int a, Colour c, bool value) -> void
            {
                auto s = slot(a, c);
                if (static_cast<bool>(_selected[s]) == value)
                    return;
                _selected[s] = value;
                _selected_count[a] += value ? 1 : -1;
                if (_selected_count[a] == 0)
                    _uncoloured.insert(a);
                else
                    _uncoloured.erase(a);

                auto v = _a_vertices[a];
                for (auto e : _group[s]) {
                    auto y = _graph.other_end(e, v);
                    if (_in_a[y]) {
                        if (! edge_live(e))
                            continue;
                        if (edge_in_conflict(e))
                            _edge_conflicts.insert(e);
                        else
                            _edge_conflicts.erase(e);
                    }
                    else {
                        _clash[y] += value ? 1 : -1;
                        refresh_overload(y);
                    }
                }
            }

            auto draw(Rng & rng, int a, Colour c) -> void
            {
                set_variable(a, c, std::bernoulli_distribution{ _params.p }(rng));
            }

        public:
            TwoPhaseStats stats;

            PhaseA(const ConflictInstance & instance, const TwoPhaseParams & params, const vector<char> & in_a) :
                _instance(instance),
                _graph(instance.graph()),
                _params(params),
                _in_a(in_a),
                _k(instance.colours()),
                _a_index(_graph.vertex_count(), -1),
                _clash(_graph.vertex_count(), 0)
            {
                for (VertexId v = 0 ; v < _graph.vertex_count() ; ++v)
                    if (_in_a[v]) {
                        _a_index[v] = static_cast<int>(_a_vertices.size());
                        _a_vertices.push_back(v);
                    }

                auto slots = _a_vertices.size() * (_k + 1);
                _pruned.assign(slots, 0);
                _selected.assign(slots, 0);
                _group.assign(slots, {});
                _selected_count.assign(_a_vertices.size(), 0);

                vector<int> inside(_k + 1);
                for (int a = 0 ; a < static_cast<int>(_a_vertices.size()) ; ++a) {
                    auto v = _a_vertices[a];
                    std::fill(inside.begin(), inside.end(), 0);
                    for (auto e : _graph.incident(v)) {
                        auto c = _instance.local_colour(e, v);
                        _group[slot(a, c)].push_back(e);
                        if (_in_a[_graph.other_end(e, v)])
                            ++inside[c];
                    }

                    int eligible = 0;
                    for (Colour c = 1 ; c <= _k ; ++c) {
                        if (inside[c] > _params.prune_cap) {
                            _pruned[slot(a, c)] = 1;
                            ++stats.pruned_colours;
                        }
                        else
                            ++eligible;
                    }
                    if (eligible == 0)
                        throw InvalidInput{ "every colour at vertex " + to_string(v) + " was pruned" };
                    _uncoloured.insert(a);
                }
            }

            auto run(Rng & rng) -> bool
            {
                for (int a = 0 ; a < static_cast<int>(_a_vertices.size()) ; ++a)
                    for (Colour c = 1 ; c <= _k ; ++c)
                        if (! _pruned[slot(a, c)])
                            draw(rng, a, c);

                vector<std::size_t> seen;
                while (! (_uncoloured.empty() && _edge_conflicts.empty() && _overloaded.empty())) {
                    if (stats.phase_a_resamples >= _params.resample_cap)
                        return false;
                    ++stats.phase_a_resamples;

                    if (! _uncoloured.empty()) {
                        auto a = *_uncoloured.begin();
                        for (Colour c = 1 ; c <= _k ; ++c)
                            if (! _pruned[slot(a, c)])
                                draw(rng, a, c);
                    }
                    else if (! _edge_conflicts.empty()) {
                        auto e = *_edge_conflicts.begin();
                        auto & edge = _graph.edge(e);
                        auto p = _instance.pair(e);
                        draw(rng, _a_index[edge.u], p.at_u);
                        draw(rng, _a_index[edge.v], p.at_v);
                    }
                    else {
                        auto x = *_overloaded.begin();
                        seen.clear();
                        for (auto e : _graph.incident(x)) {
                            auto y = _graph.other_end(e, x);
                            if (! _in_a[y])
                                continue;
                            auto c = _instance.local_colour(e, y);
                            auto s = slot(_a_index[y], c);
                            if (_pruned[s] || std::find(seen.begin(), seen.end(), s) != seen.end())
                                continue;
                            seen.push_back(s);
                            draw(rng, _a_index[y], c);
                        }
                    }
                }
                return true;
            }

            /// Lowest selected colour at every A vertex.
            auto deselect(Colouring & colouring) const -> void
            {
                for (int a = 0 ; a < static_cast<int>(_a_vertices.size()) ; ++a) {
                    Colour c = 1;
                    while (! _selected[slot(a, c)])
                        ++c;
                    colouring[_a_vertices[a]] = c;
                }
            }
    };

    auto phase_b(const ConflictInstance & instance, const TwoPhaseParams & params, const vector<char> & in_a,
            Colouring & colouring, Rng & rng, TwoPhaseStats & stats) -> SolveResult
    {
        auto & graph = instance.graph();
        auto k = instance.colours();
        auto kb = params.phase_b_colours;

        vector<VertexId> b_vertices;
        vector<int> b_index(graph.vertex_count(), -1);
        for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
            if (! in_a[v]) {
                b_index[v] = static_cast<int>(b_vertices.size());
                b_vertices.push_back(v);
            }

        // kept[b][i] is the original colour behind reduced colour i + 1
        vector<vector<Colour>> kept(b_vertices.size());
        vector<vector<Colour>> renamed(b_vertices.size());
        vector<char> clashing(k + 1);
        for (std::size_t b = 0 ; b < b_vertices.size() ; ++b) {
            auto x = b_vertices[b];
            std::fill(clashing.begin(), clashing.end(), 0);
            for (auto e : graph.incident(x)) {
                auto y = graph.other_end(e, x);
                if (in_a[y] && colouring[y] == instance.local_colour(e, y))
                    clashing[instance.local_colour(e, x)] = 1;
            }
            renamed[b].assign(k + 1, 0);
            for (Colour c = 1 ; c <= k && static_cast<int>(kept[b].size()) < kb ; ++c)
                if (! clashing[c]) {
                    kept[b].push_back(c);
                    renamed[b][c] = static_cast<Colour>(kept[b].size());
                }
            if (static_cast<int>(kept[b].size()) < kb)
                throw InvalidInput{ "vertex " + to_string(x) + " keeps fewer than " + to_string(kb) + " colours after phase A" };
        }

        Multigraph reduced(static_cast<int>(b_vertices.size()));
        vector<LocalPair> pairs;
        for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
            auto & edge = graph.edge(e);
            if (in_a[edge.u] || in_a[edge.v])
                continue;
            auto p = instance.pair(e);
            auto bu = b_index[edge.u], bv = b_index[edge.v];
            auto cu = renamed[bu][p.at_u], cv = renamed[bv][p.at_v];
            if (cu == 0 || cv == 0)
                continue;
            reduced.add_edge(bu, bv);
            pairs.push_back({ cu, cv });
        }
        stats.phase_b_max_degree = graph_stats(reduced).max_degree;

        ConflictInstance b_instance{ std::move(reduced), kb, std::move(pairs) };
        auto result = solve_lll_with(b_instance, rng, params.resample_cap);
        stats.phase_b_resamples = result.resamples;
        if (result.success())
            for (std::size_t b = 0 ; b < b_vertices.size() ; ++b)
                colouring[b_vertices[b]] = kept[b][(*result.colouring)[b] - 1];
        return result;
    }

    auto check_phase_a_contract(const ConflictInstance & instance, const TwoPhaseParams & params,
            const vector<char> & in_a, const Colouring & colouring, TwoPhaseStats & stats) -> void
    {
        auto & graph = instance.graph();
        vector<int> clash(graph.vertex_count(), 0);
        for (EdgeId e = 0 ; e < graph.edge_count() ; ++e) {
            auto & edge = graph.edge(e);
            auto p = instance.pair(e);
            if (in_a[edge.u] && in_a[edge.v]) {
                if (colouring[edge.u] == p.at_u && colouring[edge.v] == p.at_v)
                    stats.phase_a_conflict_free = false;
            }
            else if (in_a[edge.u] && colouring[edge.u] == p.at_u)
                ++clash[edge.v];
            else if (in_a[edge.v] && colouring[edge.v] == p.at_v)
                ++clash[edge.u];
        }
        for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
            if (! in_a[v])
                stats.max_b_clash = std::max(stats.max_b_clash, clash[v]);
        stats.b_cap_respected = stats.max_b_clash <= params.b_cap;

        if (! stats.phase_a_conflict_free || ! stats.b_cap_respected)
            throw std::logic_error{ "phase A output breaks its contract" };
    }

    auto run_attempt(const ConflictInstance & instance, const TwoPhaseParams & params, const vector<char> & in_a, Rng & rng) -> Attempt
    {
        Attempt attempt;
        auto & stats = attempt.stats;
        for (auto a : in_a)
            ++(a ? stats.a_size : stats.b_size);

        Colouring colouring(instance.graph().vertex_count(), 0);

        PhaseA phase_a(instance, params, in_a);
        bool phase_a_done = phase_a.run(rng);
        stats.pruned_colours = phase_a.stats.pruned_colours;
        stats.phase_a_resamples = phase_a.stats.phase_a_resamples;
        attempt.result.resamples = stats.phase_a_resamples;
        if (! phase_a_done) {
            attempt.result.verdict = Verdict::cap_exhausted;
            attempt.result.diagnostic = "phase A resample cap exhausted";
            return attempt;
        }
        phase_a.deselect(colouring);
        check_phase_a_contract(instance, params, in_a, colouring, stats);

        auto b = phase_b(instance, params, in_a, colouring, rng, stats);
        attempt.result.resamples += b.resamples;
        if (! b.success()) {
            attempt.result.verdict = b.verdict;
            attempt.result.diagnostic = "phase B: " + b.diagnostic;
            return attempt;
        }

        if (! validate_colouring(instance, colouring).empty())
            throw std::logic_error{ "two-phase pipeline produced an invalid colouring" };
        attempt.result.verdict = Verdict::colourable;
        attempt.result.colouring = std::move(colouring);
        return attempt;
    }
}

auto conflict::two_phase(const ConflictInstance & instance, const TwoPhaseParams & params, std::uint64_t seed) -> TwoPhaseResult
{
    params.validate();
    if (instance.colours() < params.k_a || instance.colours() < params.k_b)
        throw InvalidInput{ "two-phase pipeline needs k >= max(k_a, k_b) = "
            + to_string(std::max(params.k_a, params.k_b)) + ", got k = " + to_string(instance.colours()) };

    auto & graph = instance.graph();
    vector<char> in_a(graph.vertex_count(), 0);
    bool any_a = false;
    if (graph.edge_count() > 0)
        for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
            if (graph.degree(v) >= params.split_threshold) {
                in_a[v] = 1;
                any_a = true;
            }

    TwoPhaseResult outcome;
    std::uint64_t total_resamples = 0;
    for (int attempt = 0 ; attempt < params.retry_cap ; ++attempt) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
        if (! any_a) {
            outcome.stats = TwoPhaseStats{};
            outcome.stats.b_size = graph.vertex_count();
            outcome.stats.phase_b_max_degree = graph_stats(graph).max_degree;
            outcome.result = solve_lll_with(instance, rng, params.resample_cap);
            outcome.stats.phase_b_resamples = outcome.result.resamples;
        }
        else {
            auto run = run_attempt(instance, params, in_a, rng);
            outcome.result = std::move(run.result);
            outcome.stats = run.stats;
        }

        total_resamples += outcome.result.resamples;
        outcome.result.attempts = attempt + 1;
        outcome.result.resamples = total_resamples;
        if (outcome.result.success())
            break;
    }
    return outcome;
}
