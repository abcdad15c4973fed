#include <conflict/lll.hh>

#include <set>
#include <stdexcept>

using namespace conflict;

using std::set;
using std::to_string;

auto conflict::solve_lll_with(const ConflictInstance & instance, Rng & rng, std::uint64_t cap) -> SolveResult
{
    auto & graph = instance.graph();
    auto k = instance.colours();

    Colouring colour(graph.vertex_count());
    for (auto & c : colour)
        c = uniform_int(rng, 1, k);

    auto in_conflict = [&] (EdgeId e) {
        auto & edge = graph.edge(e);
        auto pair = instance.pair(e);
        return colour[edge.u] == pair.at_u && colour[edge.v] == pair.at_v;
    };

    set<EdgeId> violated;
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e)
        if (in_conflict(e))
            violated.insert(violated.end(), e);

    SolveResult result;
    while (! violated.empty()) {
        if (result.resamples >= cap) {
            result.verdict = Verdict::cap_exhausted;
            result.diagnostic = to_string(violated.size()) + " edges still in conflict after " + to_string(cap) + " resamples";
            return result;
        }

        auto edge = graph.edge(*violated.begin());
        ++result.resamples;
        for (auto v : { edge.u, edge.v }) {
            colour[v] = uniform_int(rng, 1, k);
            for (auto f : graph.incident(v)) {
                if (in_conflict(f))
                    violated.insert(f);
                else
                    violated.erase(f);
            }
        }
    }

    if (! validate_colouring(instance, colour).empty())
        throw std::logic_error{ "resampling produced an invalid colouring" };

    result.verdict = Verdict::colourable;
    result.colouring = std::move(colour);
    return result;
}

auto conflict::solve_lll(const ConflictInstance & instance, std::uint64_t seed, std::uint64_t cap) -> SolveResult
{
    auto rng = make_rng(seed);
    return solve_lll_with(instance, rng, cap);
}
