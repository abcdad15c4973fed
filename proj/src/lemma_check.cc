#include <conflict/lemma_check.hh>
#include <conflict/graph.hh>

#include <cmath>

using namespace conflict;

namespace
{
    // coefficient * d^power / exp(sqrt(d) / scale), kept finite for large d
    auto damped(double coefficient, double d, double power, double scale) -> double
    {
        return coefficient * std::exp(power * std::log(d) - std::sqrt(d) / scale);
    }
}

auto conflict::lll_feasibility_check(double d) -> LemmaFeasibility
{
    if (! (d > 0))
        throw InvalidInput{ "degree scale must be positive" };

    auto root = std::sqrt(d);
    auto two_7 = std::ldexp(1.0, 7);
    auto two_13 = std::ldexp(1.0, 13);
    auto two_14 = std::ldexp(1.0, 14);

    auto uncoloured_rhs = std::exp(-1 / two_7 - 1 / (two_14 * d) - 1 / two_7 - 1 / (two_14 * d)
            - damped(2, d, 2, 64) - damped(4, d, 2, 32));

    auto edge_factor = 1 - 1 / (two_7 * d);
    auto edge_conflict_rhs = edge_factor * edge_factor * std::exp(-1 / std::ldexp(1.0, 6) - 1 / (two_13 * d)
            - damped(4, d, 2, 64) - damped(8, d, 2, 32));

    auto overload_lhs = -root / 16 + root / 64;
    auto overload_rhs = -1 / two_7 - 1 / (two_14 * d) - root / two_7 - 1 / (two_14 * root)
        - damped(2, d, 1.5, 64) - damped(4, d, 1.5, 32);

    LemmaFeasibility result;
    result.uncoloured_slack = uncoloured_rhs - 0.5;
    result.edge_conflict_slack = edge_conflict_rhs - 0.5;
    result.overload_slack = overload_rhs - overload_lhs;
    result.holds = result.uncoloured_slack >= 0 && result.edge_conflict_slack >= 0 && result.overload_slack >= 0;
    return result;
}
