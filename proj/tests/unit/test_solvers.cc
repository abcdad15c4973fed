#include <doctest.h>

#include "../oracles.hh"

#include <conflict/bounds.hh>
#include <conflict/exact.hh>
#include <conflict/generators.hh>
#include <conflict/lll.hh>
#include <conflict/orientation.hh>
#include <conflict/peel.hh>

using namespace conflict;

namespace
{
    auto forced_edge(int k) -> ConflictInstance
    {
        return build_instance(2, { { 0, 1 } }, k, { { 1, 1 } });
    }
}

TEST_CASE("exact solver examples")
{
    CHECK(solve_exact(forced_edge(1)).verdict == Verdict::unsatisfiable);
    auto two = solve_exact(forced_edge(2));
    REQUIRE(two.success());
    CHECK(oracle::valid(forced_edge(2), *two.colouring));

    CHECK(solve_exact(gen_two_vertex(2)).verdict == Verdict::unsatisfiable);
    auto rng = make_rng(4);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto inst = oracle::random_instance(rng, gen_two_vertex(2).graph(), 3);
        CHECK(oracle::colourable(inst));
        CHECK(solve_exact(inst).success());
    }
}

TEST_CASE("lower-bound families at and above their budget")
{
    for (int k = 1 ; k <= 3 ; ++k) {
        auto inst = gen_two_vertex(k);
        CHECK_FALSE(oracle::colourable(inst));
        CHECK(solve_exact(inst).verdict == Verdict::unsatisfiable);
        CHECK(oracle::colourable(inst.with_colours(k + 1)));
        CHECK(solve_exact(inst.with_colours(k + 1)).success());

        auto star = gen_star(k);
        CHECK_FALSE(oracle::colourable(star));
        CHECK(solve_exact(star).verdict == Verdict::unsatisfiable);
    }
}

TEST_CASE("exact solver is complete on small instances")
{
    auto rng = make_rng(99);
    for (int trial = 0 ; trial < 600 ; ++trial) {
        auto n = uniform_int(rng, 1, 6);
        auto k = uniform_int(rng, 1, 3);
        auto m = n >= 2 ? uniform_int(rng, 0, 12) : 0;
        auto inst = oracle::random_instance(rng, oracle::random_graph(rng, n, m), k);
        auto result = solve_exact(inst);
        CHECK(result.success() == oracle::colourable(inst));
        if (result.success())
            CHECK(oracle::valid(inst, *result.colouring));
        else
            CHECK(result.verdict == Verdict::unsatisfiable);
    }
}

TEST_CASE("exact solver reports budget exhaustion separately")
{
    auto hard = gen_star(3);
    auto limited = solve_exact(hard, { 2, std::nullopt });
    CHECK(limited.verdict == Verdict::budget_exhausted);
    CHECK_FALSE(limited.colouring);
    CHECK(solve_exact(hard).verdict == Verdict::unsatisfiable);
    CHECK_THROWS_AS(solve_exact(hard, { 0, std::nullopt }), InvalidInput);
}

TEST_CASE("orientation examples")
{
    CHECK(solve_orientation(oracle::cycle(5)).max_outdegree == 1);
    CHECK(solve_orientation(oracle::complete(4)).max_outdegree == 2);
    CHECK(oracle::min_max_outdegree(oracle::complete(4)) == 2);
    auto bundle = gen_two_vertex(2).graph();
    CHECK(solve_orientation(bundle).max_outdegree == 2);
    CHECK(oracle::min_max_outdegree(bundle) == 2);
}

TEST_CASE("orientation is optimal on small graphs")
{
    auto rng = make_rng(31);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto n = uniform_int(rng, 2, 7);
        auto g = oracle::random_graph(rng, n, uniform_int(rng, 0, 12));
        auto r = solve_orientation(g);
        CHECK(max_outdegree(g, r.orientation) == r.max_outdegree);
        CHECK(r.max_outdegree == oracle::min_max_outdegree(g));
        CHECK(r.max_outdegree == oracle::max_density(g));
    }
}

TEST_CASE("orientation matches density on larger graphs")
{
    auto rng = make_rng(37);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto n = uniform_int(rng, 4, 14);
        auto g = oracle::random_graph(rng, n, uniform_int(rng, 0, 60));
        CHECK(solve_orientation(g).max_outdegree == oracle::max_density(g));
    }
}

TEST_CASE("solving through orientations")
{
    auto rng = make_rng(41);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto n = uniform_int(rng, 2, 30);
        Multigraph tree(n);
        for (int v = 1 ; v < n ; ++v)
            tree.add_edge(uniform_int(rng, 0, v - 1), v);
        auto inst = oracle::random_instance(rng, tree, 2);
        auto r = solve_via_orientation(inst);
        REQUIRE(r.success());
        CHECK(oracle::valid(inst, *r.colouring));
    }

    CHECK(solve_via_orientation(gen_two_vertex(2)).verdict == Verdict::not_applicable);

    for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
        auto inst = gen_random_partition(gen_planar_triangulation(60, seed), 4, seed);
        auto r = solve_via_orientation(inst);
        REQUIRE(r.success());
        CHECK(oracle::valid(inst, *r.colouring));
    }
}

TEST_CASE("resampling solver examples")
{
    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
        auto r = solve_lll(forced_edge(2), seed);
        REQUIRE(r.success());
        CHECK(oracle::valid(forced_edge(2), *r.colouring));
        CHECK(r.resamples < 50);
    }
    CHECK(solve_lll(forced_edge(1), 1, 1000).verdict == Verdict::cap_exhausted);
    CHECK(solve_lll(forced_edge(1), 1, 1000).resamples == 1000);

    auto a = solve_lll(gen_star(2).with_colours(4), 77);
    auto b = solve_lll(gen_star(2).with_colours(4), 77);
    CHECK(a.colouring == b.colouring);
    CHECK(a.resamples == b.resamples);
}

TEST_CASE("resampling at the max-degree bound for degree 5")
{
    auto g = gen_bounded_degree_multigraph(60, 5, 2, 5);
    auto delta = graph_stats(g).max_degree;
    REQUIRE(delta == 5);
    auto k = bound_max_degree(delta);
    CHECK(k == 5);
    double total = 0;
    for (std::uint64_t seed = 0 ; seed < 100 ; ++seed) {
        auto inst = gen_random_partition(g, k, seed);
        auto r = solve_lll(inst, seed);
        REQUIRE(r.success());
        CHECK(oracle::valid(inst, *r.colouring));
        total += static_cast<double>(r.resamples);
    }
    CHECK(total / 100 <= 10.0 * g.edge_count());
}

TEST_CASE("peeling examples")
{
    auto rng = make_rng(43);
    Multigraph forest(9, { { 0, 1 }, { 1, 2 }, { 3, 4 }, { 3, 5 }, { 5, 6 } });
    auto fk = kernelize(oracle::random_instance(rng, forest, 2));
    CHECK(fk.core.graph().vertex_count() == 0);
    CHECK(fk.trace.size() == 9);

    auto k5 = kernelize(oracle::random_instance(rng, oracle::complete(5), 4));
    CHECK(k5.core.graph().vertex_count() == 5);
    CHECK(k5.core.graph().edge_count() == 10);
    CHECK(k5.trace.empty());

    for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
        auto t = kernelize(gen_random_partition(gen_planar_triangulation(80, seed), 6, seed));
        CHECK(t.core.graph().vertex_count() == 0);
    }

    auto p3 = build_instance(3, { { 0, 1 }, { 1, 2 } }, 2, { { 1, 1 }, { 1, 1 } });
    auto pk = kernelize(p3);
    auto c = extend_peeled({}, pk, p3);
    CHECK(oracle::valid(p3, c));

    auto single = build_instance(2, { { 0, 1 } }, 2, { { 1, 1 } });
    auto sk = kernelize(single);
    REQUIRE(sk.trace.size() == 2);
    CHECK(sk.trace[0].vertex == 0);
    CHECK(sk.trace[0].edges.size() == 1);
    CHECK(extend_peeled({}, sk, single) == Colouring{ 2, 1 });
}

TEST_CASE("peeling records degrees below k and never recolours the core")
{
    auto rng = make_rng(47);
    int nonempty_cores = 0;
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto n = uniform_int(rng, 5, 12);
        auto g = oracle::random_graph(rng, n, uniform_int(rng, n, 3 * n));
        auto k = uniform_int(rng, 2, 4);
        auto inst = oracle::random_instance(rng, g, k);
        auto kernel = kernelize(inst);
        for (auto & step : kernel.trace)
            CHECK(static_cast<int>(step.edges.size()) < k);
        for (VertexId v = 0 ; v < kernel.core.graph().vertex_count() ; ++v)
            CHECK(kernel.core.graph().degree(v) >= k);

        auto core = solve_exact(kernel.core);
        if (! core.success())
            continue;
        ++nonempty_cores;
        auto full = extend_peeled(*core.colouring, kernel, inst);
        CHECK(oracle::valid(inst, full));
        for (std::size_t i = 0 ; i < kernel.core_vertices.size() ; ++i)
            CHECK(full[kernel.core_vertices[i]] == (*core.colouring)[i]);
    }
    CHECK(nonempty_cores > 20);
}
