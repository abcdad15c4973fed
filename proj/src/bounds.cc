#include <conflict/bounds.hh>
#include <conflict/graph.hh>

#include <cmath>

using namespace conflict;

using std::to_string;

namespace
{
    constexpr double integer_slack = 1e-9;
}

auto conflict::robust_ceil(double x) -> long long
{
    auto r = std::round(x);
    if (std::abs(x - r) <= integer_slack * std::max(1.0, std::abs(x)))
        return static_cast<long long>(r);
    return static_cast<long long>(std::ceil(x));
}

auto conflict::robust_floor(double x) -> long long
{
    auto r = std::round(x);
    if (std::abs(x - r) <= integer_slack * std::max(1.0, std::abs(x)))
        return static_cast<long long>(r);
    return static_cast<long long>(std::floor(x));
}

auto BoundConstants::validate() const -> void
{
    if (! (surface > 0 && edges > 0 && adaptable_surface > 0 && lemma > 0))
        throw InvalidInput{ "bound constants must be strictly positive" };
    if (! (log_base > 1))
        throw InvalidInput{ "logarithm base must exceed 1" };
}

auto BoundConstants::log(double x) const -> double
{
    return std::log(x) / std::log(log_base);
}

auto conflict::bound_max_degree(long long max_degree) -> long long
{
    if (max_degree < 1)
        throw InvalidInput{ "maximum degree must be at least 1, got " + to_string(max_degree) };

    // e(2D - 1) is irrational, so the answer is the least k with k^2 > target
    auto target = std::numbers::e * (2.0 * max_degree - 1.0);
    auto k = static_cast<long long>(std::ceil(std::sqrt(target)));
    while (static_cast<double>(k) * k <= target)
        ++k;
    while (k > 1 && static_cast<double>(k - 1) * (k - 1) > target)
        --k;
    return k;
}

auto conflict::lower_bound_avg_degree(double average_degree, const BoundConstants & constants) -> long long
{
    if (! (average_degree >= 3))
        throw InvalidInput{ "average degree must be at least 3" };
    constants.validate();
    return robust_floor(std::sqrt(average_degree / constants.log(average_degree)));
}

auto conflict::bound_edges(long long edges, long long multiplicity, const BoundConstants & constants) -> BoundValue
{
    if (edges < 3)
        throw InvalidInput{ "edge count must be at least 3, got " + to_string(edges) };
    if (multiplicity < 1)
        throw InvalidInput{ "multiplicity must be at least 1" };
    constants.validate();

    auto product = static_cast<double>(edges) * static_cast<double>(multiplicity);
    auto value = constants.edges * std::pow(product, 0.25) * constants.log(product);
    return { value, robust_ceil(value) };
}

auto conflict::bound_surface(long long genus, long long multiplicity, const BoundConstants & constants) -> BoundValue
{
    if (genus < 0)
        throw InvalidInput{ "Euler genus must be nonnegative, got " + to_string(genus) };
    if (multiplicity < 1)
        throw InvalidInput{ "multiplicity must be at least 1" };
    constants.validate();

    auto mu = static_cast<double>(multiplicity);
    auto g = static_cast<double>(genus);
    auto value = std::max(constants.surface * std::sqrt(mu) * std::pow(g + 1, 0.25) * constants.log(mu * mu * (g + 2)), 8 * mu);
    return { value, robust_ceil(value) };
}

auto conflict::bound_adaptable_edges(long long edges, long long multiplicity) -> AdaptableEdgesBound
{
    if (edges < 1 || multiplicity < 1)
        throw InvalidInput{ "edge count and multiplicity must be positive" };

    auto factor = std::pow(2.0, 11.0 / 4.0) * std::sqrt(std::numbers::e);
    auto value = factor * std::pow(static_cast<double>(edges) * static_cast<double>(multiplicity), 0.25);
    return { { value, robust_ceil(value) }, edges < (1LL << 16) };
}

auto conflict::bound_adaptable_surface(long long genus, long long multiplicity, const BoundConstants & constants) -> BoundValue
{
    if (genus < 0)
        throw InvalidInput{ "Euler genus must be nonnegative, got " + to_string(genus) };
    if (multiplicity < 1)
        throw InvalidInput{ "multiplicity must be at least 1" };
    constants.validate();

    auto value = constants.adaptable_surface * std::sqrt(static_cast<double>(multiplicity))
        * std::pow(static_cast<double>(genus) + 1, 0.25);
    return { value, robust_ceil(value) };
}

auto conflict::heawood_number(long long genus) -> int
{
    if (genus < 0)
        throw InvalidInput{ "Euler genus must be nonnegative, got " + to_string(genus) };

    // floor((7 + sqrt(24g + 1)) / 2) with an exact integer square root
    auto radicand = 24 * genus + 1;
    auto root = static_cast<long long>(std::sqrt(static_cast<double>(radicand)));
    while (root * root > radicand)
        --root;
    while ((root + 1) * (root + 1) <= radicand)
        ++root;
    return static_cast<int>((7 + root) / 2);
}

auto conflict::heawood_orientation_bound(long long genus) -> SurfaceOrientationBound
{
    if (genus < 0)
        throw InvalidInput{ "Euler genus must be nonnegative, got " + to_string(genus) };
    if (genus == 0)
        return { true, 0, 4, 1, 3 };

    auto h = heawood_number(genus);
    // h / 2 + 1 = (h + 2) / 2
    if ((h + 2) % 2 == 0)
        return { false, h, (h + 2) / 2, 1, 0 };
    return { false, h, h + 2, 2, 0 };
}
