#include <conflict/choosability.hh>
#include <conflict/exact.hh>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

using namespace conflict;

using std::atomic;
using std::optional;
using std::to_string;
using std::vector;

namespace
{
    // number of ways to split d labelled items into at most k unlabelled classes
    auto restricted_partitions(int d, int k) -> long double
    {
        // stirling[j] = S(i, j) as i grows
        vector<long double> stirling(d + 1, 0.0L);
        stirling[0] = 1.0L;
        for (int i = 1 ; i <= d ; ++i) {
            for (int j = i ; j >= 1 ; --j)
                stirling[j] = j * stirling[j] + stirling[j - 1];
            stirling[0] = 0.0L;
        }
        long double total = d == 0 ? 1.0L : 0.0L;
        for (int j = 1 ; j <= std::min(d, k) ; ++j)
            total += stirling[j];
        return total;
    }

    class PartitionEnumerator
    {
        private:
            const Multigraph & _graph;
            int _k;
            bool _pruning;
            int _slots;

            vector<LocalPair> _pairs;
            vector<int> _used;                 // highest colour used so far per vertex

        public:
            PartitionEnumerator(const Multigraph & graph, int k, bool pruning) :
                _graph(graph),
                _k(k),
                _pruning(pruning),
                _slots(2 * graph.edge_count()),
                _pairs(graph.edge_count(), LocalPair{ 1, 1 }),
                _used(graph.vertex_count(), 0)
            {
            }

            auto slots() const -> int { return _slots; }
            auto pairs() const -> const vector<LocalPair> & { return _pairs; }

            auto vertex_of(int slot) const -> VertexId
            {
                auto & e = _graph.edge(slot / 2);
                return slot % 2 == 0 ? e.u : e.v;
            }

            auto limit(int slot) const -> int
            {
                return _pruning ? std::min(_k, _used[vertex_of(slot)] + 1) : _k;
            }

            // returns the previous used value, for undo
            auto set(int slot, Colour c) -> int
            {
                auto & p = _pairs[slot / 2];
                (slot % 2 == 0 ? p.at_u : p.at_v) = c;
                auto & used = _used[vertex_of(slot)];
                auto old = used;
                used = std::max(used, c);
                return old;
            }

            auto unset(int slot, int old_used) -> void
            {
                _used[vertex_of(slot)] = old_used;
            }

            /// Visits completions from slot onwards until visit returns true.
            template <typename Visit_>
            auto complete(int slot, Visit_ & visit) -> bool
            {
                if (slot == _slots)
                    return visit(_pairs);
                for (Colour c = 1, l = limit(slot) ; c <= l ; ++c) {
                    auto old = set(slot, c);
                    bool stop = complete(slot + 1, visit);
                    unset(slot, old);
                    if (stop)
                        return true;
                }
                return false;
            }

            auto prefixes(int depth) -> vector<vector<Colour>>
            {
                vector<vector<Colour>> result;
                vector<Colour> current;
                auto walk = [&] (auto & self, int slot) -> void {
                    if (slot == depth) {
                        result.push_back(current);
                        return;
                    }
                    for (Colour c = 1, l = limit(slot) ; c <= l ; ++c) {
                        auto old = set(slot, c);
                        current.push_back(c);
                        self(self, slot + 1);
                        current.pop_back();
                        unset(slot, old);
                    }
                };
                walk(walk, 0);
                return result;
            }
    };
}

auto conflict::canonical_partition_count(const Multigraph & graph, int k) -> long double
{
    long double total = 1.0L;
    for (VertexId v = 0 ; v < graph.vertex_count() ; ++v)
        total *= restricted_partitions(graph.degree(v), k);
    return total;
}

auto conflict::search_hard_partition(const Multigraph & graph, int k, const ChoosabilityOptions & options) -> PartitionSearch
{
    if (k < 1)
        throw InvalidInput{ "colour budget must be positive" };
    auto threads = std::max(1, options.threads);

    PartitionEnumerator root(graph, k, options.symmetry_pruning);
    int depth = 0;
    {
        long double count = 1;
        while (depth < root.slots() && count < 16.0L * threads) {
            count *= options.symmetry_pruning ? 2 : k;
            ++depth;
        }
    }
    auto prefixes = root.prefixes(depth);

    atomic<std::size_t> next_prefix{ 0 };
    atomic<std::size_t> best_prefix{ std::numeric_limits<std::size_t>::max() };
    atomic<std::uint64_t> work{ 0 };
    atomic<std::uint64_t> partitions{ 0 };
    atomic<bool> out_of_budget{ false };
    std::mutex witness_mutex;
    optional<vector<LocalPair>> witness;

    auto worker = [&] {
        PartitionEnumerator enumerator(graph, k, options.symmetry_pruning);
        ExactSearch search(graph, k);
        while (true) {
            auto i = next_prefix++;
            if (i >= prefixes.size() || i > best_prefix.load() || out_of_budget.load())
                return;

            vector<int> olds;
            for (int s = 0 ; s < depth ; ++s)
                olds.push_back(enumerator.set(s, prefixes[i][s]));

            auto visit = [&] (const vector<LocalPair> & pairs) -> bool {
                if (i > best_prefix.load() || out_of_budget.load())
                    return true;
                ++partitions;
                auto spent = work.load();
                if (spent >= options.work_budget) {
                    out_of_budget = true;
                    return true;
                }
                SearchLimits limits{ options.work_budget - spent, std::nullopt };
                auto outcome = search.solve(pairs, limits);
                work += search.nodes() + 1;
                if (outcome == ExactSearch::Outcome::budget_exhausted) {
                    out_of_budget = true;
                    return true;
                }
                if (outcome == ExactSearch::Outcome::exhausted_search) {
                    std::lock_guard lock{ witness_mutex };
                    if (i < best_prefix.load()) {
                        best_prefix = i;
                        witness = pairs;
                    }
                    return true;
                }
                return false;
            };
            enumerator.complete(depth, visit);

            for (int s = depth - 1 ; s >= 0 ; --s)
                enumerator.unset(s, olds[s]);
        }
    };

    if (threads == 1)
        worker();
    else {
        vector<std::jthread> pool;
        for (int t = 0 ; t < threads ; ++t)
            pool.emplace_back(worker);
    }

    PartitionSearch result;
    result.partitions = partitions.load();
    result.work = work.load();
    if (witness) {
        result.status = ChoosabilityStatus::determined;
        result.hard_partition = ConflictInstance{ graph, k, *witness };
    }
    else if (out_of_budget.load())
        result.status = ChoosabilityStatus::budget_exceeded;
    else
        result.status = ChoosabilityStatus::determined;
    return result;
}

auto conflict::exact_choosability(const Multigraph & graph, const ChoosabilityOptions & options) -> ChoosabilityResult
{
    if (options.k_max < 1)
        throw InvalidInput{ "k_max must be positive" };

    ChoosabilityResult result;
    optional<ConflictInstance> last_hard;
    for (int k = 1 ; k <= options.k_max ; ++k) {
        auto count = options.symmetry_pruning ? canonical_partition_count(graph, k)
            : std::pow(static_cast<long double>(k), 2.0L * graph.edge_count());
        auto estimate = count * std::max(1, graph.vertex_count());
        if (estimate > static_cast<long double>(options.work_budget - result.work)) {
            result.status = ChoosabilityStatus::budget_exceeded;
            result.diagnostic = "deciding k = " + to_string(k) + " needs about " + to_string(static_cast<double>(estimate))
                + " steps, over the remaining work budget";
            return result;
        }

        auto remaining = options;
        remaining.work_budget = options.work_budget - result.work;
        auto search = search_hard_partition(graph, k, remaining);
        result.partitions += search.partitions;
        result.work += search.work;

        if (search.status == ChoosabilityStatus::budget_exceeded) {
            result.status = ChoosabilityStatus::budget_exceeded;
            result.diagnostic = "work budget exhausted while deciding k = " + to_string(k);
            return result;
        }
        if (! search.hard_partition) {
            result.status = ChoosabilityStatus::determined;
            result.value = k;
            result.witness = std::move(last_hard);
            return result;
        }
        last_hard = std::move(search.hard_partition);
    }

    result.status = ChoosabilityStatus::above_k_max;
    result.witness = std::move(last_hard);
    return result;
}

namespace
{
    enum class ListKind { adaptable, separation };

    class LabellingSearch
    {
        private:
            const Multigraph & _graph;
            int _k;
            ListKind _kind;
            std::uint64_t _budget;
            int _n;
            int _m;

            vector<int> _label;                // 0 means unlabelled
            vector<int> _count;                // [v * (m + 1) + label]
            vector<int> _distinct;

        public:
            std::uint64_t work = 0;
            std::uint64_t labellings = 0;
            bool out_of_budget = false;
            optional<ConflictInstance> witness;

            LabellingSearch(const Multigraph & graph, int k, ListKind kind, std::uint64_t budget) :
                _graph(graph),
                _k(k),
                _kind(kind),
                _budget(budget),
                _n(graph.vertex_count()),
                _m(graph.edge_count()),
                _label(_m, 0),
                _count(static_cast<std::size_t>(_n) * (_m + 1), 0),
                _distinct(_n, 0)
            {
            }

            auto has(VertexId v, int label) const -> bool
            {
                return _count[static_cast<std::size_t>(v) * (_m + 1) + label] > 0;
            }

            auto add(VertexId v, int label, int delta) -> void
            {
                auto & c = _count[static_cast<std::size_t>(v) * (_m + 1) + label];
                if (c == 0 && delta > 0)
                    ++_distinct[v];
                c += delta;
                if (c == 0 && delta < 0)
                    --_distinct[v];
            }

            auto consistent_separation() const -> bool
            {
                for (EdgeId e = 0 ; e < _m ; ++e) {
                    auto & edge = _graph.edge(e);
                    for (int l = 1 ; l <= _m ; ++l)
                        if (l != _label[e] && has(edge.u, l) && has(edge.v, l))
                            return false;
                }
                return true;
            }

            // true when the labelling defeats every list colouring
            auto leaf() -> bool
            {
                ++labellings;
                if (_kind == ListKind::separation && ! consistent_separation())
                    return false;

                ListAssignment lists(_n);
                for (VertexId v = 0 ; v < _n ; ++v) {
                    for (int l = 1 ; l <= _m ; ++l)
                        if (has(v, l))
                            lists[v].push_back(l);
                    for (int pad = 0 ; static_cast<int>(lists[v].size()) < _k ; ++pad)
                        lists[v].push_back(_m + 1 + v * _k + pad);
                }

                optional<ListReduction> reduction;
                if (_kind == ListKind::adaptable) {
                    vector<int> labels(_m);
                    for (EdgeId e = 0 ; e < _m ; ++e)
                        labels[e] = _label[e] != 0 ? _label[e] : _m + 1 + _n * _k + e;
                    reduction = adaptable_to_conflict(AdaptableInstance{ _graph, std::move(lists), std::move(labels) });
                }
                else
                    reduction = separation_to_conflict(SeparationInstance{ _graph, std::move(lists) });

                auto & instance = reduction->instance;
                ExactSearch search(instance.graph(), instance.colours());
                SearchLimits limits{ _budget > work ? _budget - work : 1, std::nullopt };
                auto outcome = search.solve(instance.pairs(), limits);
                work += search.nodes() + 1;
                if (outcome == ExactSearch::Outcome::budget_exhausted || work > _budget) {
                    out_of_budget = true;
                    return true;
                }
                if (outcome == ExactSearch::Outcome::exhausted_search) {
                    witness = instance;
                    return true;
                }
                return false;
            }

            auto run(EdgeId e, int highest) -> bool
            {
                if (e == _m)
                    return leaf();

                auto & edge = _graph.edge(e);
                for (int l = 0 ; l <= highest + 1 && l <= _m ; ++l) {
                    if (l > 0) {
                        add(edge.u, l, 1);
                        add(edge.v, l, 1);
                    }
                    _label[e] = l;
                    bool stop = false;
                    if (l == 0 || (_distinct[edge.u] <= _k && _distinct[edge.v] <= _k))
                        stop = run(e + 1, std::max(highest, l));
                    if (l > 0) {
                        add(edge.u, l, -1);
                        add(edge.v, l, -1);
                    }
                    _label[e] = 0;
                    if (stop)
                        return true;
                }
                return false;
            }
    };

    auto list_choosability(const Multigraph & graph, ListKind kind, const ChoosabilityOptions & options) -> ChoosabilityResult
    {
        if (options.k_max < 1)
            throw InvalidInput{ "k_max must be positive" };
        if (! is_simple(graph))
            throw InvalidInput{ "list choosability oracles need a simple graph" };

        ChoosabilityResult result;
        optional<ConflictInstance> last_hard;
        for (int k = 1 ; k <= options.k_max ; ++k) {
            LabellingSearch search(graph, k, kind, options.work_budget - result.work);
            search.run(0, 0);
            result.partitions += search.labellings;
            result.work += search.work;
            if (search.out_of_budget) {
                result.status = ChoosabilityStatus::budget_exceeded;
                result.diagnostic = "work budget exhausted while deciding k = " + to_string(k);
                return result;
            }
            if (! search.witness) {
                result.status = ChoosabilityStatus::determined;
                result.value = k;
                result.witness = std::move(last_hard);
                return result;
            }
            last_hard = std::move(search.witness);
        }
        result.status = ChoosabilityStatus::above_k_max;
        result.witness = std::move(last_hard);
        return result;
    }
}

auto conflict::exact_adaptable_choosability(const Multigraph & graph, const ChoosabilityOptions & options) -> ChoosabilityResult
{
    return list_choosability(graph, ListKind::adaptable, options);
}

auto conflict::exact_separation_choosability(const Multigraph & graph, const ChoosabilityOptions & options) -> ChoosabilityResult
{
    return list_choosability(graph, ListKind::separation, options);
}
