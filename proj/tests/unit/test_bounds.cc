#include <doctest.h>

#include <conflict/bounds.hh>
#include <conflict/graph.hh>

#include <cmath>

using namespace conflict;

namespace
{
    // least integer k with k * k > x, by counting up
    auto least_square_above(long double x) -> long long
    {
        long long k = 1;
        while (static_cast<long double>(k) * k <= x)
            ++k;
        return k;
    }

    auto ceil_ld(long double x) -> long long
    {
        return static_cast<long long>(std::ceil(x - 1e-12L));
    }
}

TEST_CASE("max-degree bound")
{
    CHECK(bound_max_degree(1) == 2);
    CHECK(bound_max_degree(5) == 5);
    CHECK(bound_max_degree(20) == 11);
    CHECK_THROWS_AS(bound_max_degree(0), InvalidInput);

    for (long long d = 1 ; d <= 5000 ; ++d) {
        auto k = bound_max_degree(d);
        auto target = std::numbers::e_v<long double> * (2.0L * d - 1.0L);
        CHECK(k == least_square_above(target));
        CHECK(static_cast<long double>(k) * k > target);
        CHECK(static_cast<long double>(k - 1) * (k - 1) <= target);
    }
}

TEST_CASE("average-degree lower bound")
{
    CHECK(lower_bound_avg_degree(3) == 1);
    CHECK(lower_bound_avg_degree(9) == 2);
    CHECK(lower_bound_avg_degree(64) == 3);
    CHECK_THROWS_AS(lower_bound_avg_degree(2.5), InvalidInput);

    for (double d = 3 ; d <= 1e6 ; d *= 1.37) {
        auto expected = static_cast<long long>(std::floor(std::sqrt(static_cast<long double>(d) / std::log(static_cast<long double>(d)))));
        CHECK(lower_bound_avg_degree(d) == expected);
        CHECK(lower_bound_avg_degree(d) <= bound_max_degree(static_cast<long long>(std::ceil(d))));
    }
}

TEST_CASE("edge-count bound")
{
    CHECK(bound_edges(3, 1).ceiling == 2);
    CHECK(bound_edges(10000, 1).ceiling == 93);
    CHECK(bound_edges(10000, 16).ceiling == 240);
    CHECK(bound_edges(10000, 1).value == doctest::Approx(10 * std::log(1e4)));
    CHECK_THROWS_AS(bound_edges(2, 1), InvalidInput);

    BoundConstants doubled;
    doubled.edges = 2;
    CHECK(bound_edges(10000, 1, doubled).value == doctest::Approx(2 * bound_edges(10000, 1).value));
}

TEST_CASE("surface bound")
{
    CHECK(bound_surface(0, 1).ceiling == 8);
    CHECK(bound_surface(0, 2).ceiling == 16);
    CHECK(bound_surface(10000, 1).ceiling == 93);
    CHECK(bound_surface(10000, 1).ceiling == ceil_ld(std::pow(10001.0L, 0.25L) * std::log(10002.0L)));
    CHECK_THROWS_AS(bound_surface(-1, 1), InvalidInput);
}

TEST_CASE("adaptable bounds")
{
    auto a = bound_adaptable_edges(1 << 16, 1);
    CHECK(a.bound.ceiling == 178);
    CHECK_FALSE(a.below_threshold);
    CHECK(bound_adaptable_edges(1 << 20, 1).bound.ceiling == 355);
    auto small = bound_adaptable_edges(16, 1);
    CHECK(small.bound.ceiling == 23);
    CHECK(small.below_threshold);

    auto factor = std::pow(2.0L, 2.75L) * std::sqrt(std::numbers::e_v<long double>);
    CHECK(a.bound.value == doctest::Approx(static_cast<double>(factor * 16)));

    CHECK(bound_adaptable_surface(0, 1).ceiling == 1);
    CHECK(bound_adaptable_surface(15, 1).ceiling == 2);
    CHECK(bound_adaptable_surface(15, 4).ceiling == 4);
}

TEST_CASE("Heawood orientation bound")
{
    // oracle: largest h with (2h - 7)^2 <= 24g + 1
    auto heawood = [] (long long g) {
        long long h = 0;
        while ((2 * (h + 1) - 7) * (2 * (h + 1) - 7) <= 24 * g + 1 || 2 * (h + 1) - 7 < 0)
            ++h;
        return h;
    };
    for (long long g = 1 ; g <= 2000 ; ++g)
        CHECK(heawood_number(g) == heawood(g));

    auto g1 = heawood_orientation_bound(1);
    CHECK(g1.heawood_number == 6);
    CHECK(g1.value() == doctest::Approx(4.0));

    auto g2 = heawood_orientation_bound(2);
    CHECK(g2.heawood_number == 7);
    CHECK(g2.value() == doctest::Approx(4.5));
    CHECK(g2.floor() == 4);

    auto plane = heawood_orientation_bound(0);
    CHECK(plane.planar);
    CHECK(plane.value() == doctest::Approx(4.0));
    CHECK(plane.triangle_free_bound == 3);
}

TEST_CASE("bounds are nondecreasing in every argument")
{
    for (long long d = 1 ; d < 3000 ; ++d)
        CHECK(bound_max_degree(d) <= bound_max_degree(d + 1));
    for (long long m = 3 ; m < 4000 ; m += 7)
        for (long long mu = 1 ; mu < 8 ; ++mu) {
            CHECK(bound_edges(m, mu).value <= bound_edges(m + 7, mu).value);
            CHECK(bound_edges(m, mu).value <= bound_edges(m, mu + 1).value);
            CHECK(bound_adaptable_edges(m, mu).bound.value <= bound_adaptable_edges(m + 7, mu).bound.value);
            CHECK(bound_adaptable_edges(m, mu).bound.value <= bound_adaptable_edges(m, mu + 1).bound.value);
        }
    for (long long g = 0 ; g < 500 ; ++g)
        for (long long mu = 1 ; mu < 6 ; ++mu) {
            CHECK(bound_surface(g, mu).value <= bound_surface(g + 1, mu).value);
            CHECK(bound_surface(g, mu).value <= bound_surface(g, mu + 1).value);
            CHECK(bound_adaptable_surface(g, mu).value <= bound_adaptable_surface(g + 1, mu).value);
            CHECK(bound_adaptable_surface(g, mu).value <= bound_adaptable_surface(g, mu + 1).value);
        }
    for (long long g = 1 ; g < 500 ; ++g)
        CHECK(heawood_orientation_bound(g).value() <= heawood_orientation_bound(g + 1).value());
    for (double d = 3 ; d < 1e5 ; d += 13.5)
        CHECK(lower_bound_avg_degree(d) <= lower_bound_avg_degree(d + 13.5));
}

TEST_CASE("ceilings match the reals")
{
    for (long long m = 3 ; m < 2000 ; m += 11) {
        auto b = bound_edges(m, 2);
        CHECK(b.ceiling >= b.value - 1e-9);
        CHECK(b.ceiling < b.value + 1);
    }
}

TEST_CASE("constants and base are validated")
{
    BoundConstants bad;
    bad.surface = 0;
    CHECK_THROWS_AS(bound_surface(1, 1, bad), InvalidInput);
    BoundConstants base;
    base.log_base = 1;
    CHECK_THROWS_AS(bound_edges(10, 1, base), InvalidInput);

    BoundConstants two;
    two.log_base = 2;
    CHECK(bound_edges(1024, 1, two).value == doctest::Approx(std::pow(1024.0, 0.25) * 10));
}
