#include <doctest.h>

#include "../oracles.hh"

#include <conflict/reductions.hh>

using namespace conflict;

namespace
{
    auto triangle() -> Multigraph
    {
        return oracle::complete(3);
    }

    auto edge() -> Multigraph
    {
        return Multigraph(2, { { 0, 1 } });
    }
}

TEST_CASE("conflict lists become parallel edges")
{
    ConflictListAssignment two{ edge(), 2, { { { 1, 2 }, { 2, 1 } } }, std::nullopt };
    auto inst = conflict_lists_to_instance(two);
    CHECK(inst.graph().edge_count() == 2);
    CHECK(inst.pair(0) == LocalPair{ 1, 2 });
    CHECK(inst.pair(1) == LocalPair{ 2, 1 });
    CHECK(graph_stats(inst.graph()).max_multiplicity == 2);

    ConflictListAssignment all{ edge(), 2, { { { 1, 1 }, { 1, 2 }, { 2, 1 }, { 2, 2 } } }, 4 };
    auto full = conflict_lists_to_instance(all);
    CHECK(graph_stats(full.graph()).max_multiplicity == 4);
    CHECK_FALSE(oracle::colourable(full));

    ConflictListAssignment none{ triangle(), 2, { {}, {}, {} }, std::nullopt };
    auto empty = conflict_lists_to_instance(none);
    CHECK(empty.graph().edge_count() == 0);
    CHECK(oracle::count_colourings(empty) == 8);

    ConflictListAssignment dup{ edge(), 2, { { { 1, 2 }, { 1, 2 } } }, std::nullopt };
    CHECK_THROWS_AS(conflict_lists_to_instance(dup), InvalidInput);
    ConflictListAssignment over{ edge(), 2, { { { 1, 2 }, { 2, 2 } } }, 1 };
    CHECK_THROWS_AS(conflict_lists_to_instance(over), InvalidInput);
}

TEST_CASE("conflict list transcription is exact")
{
    auto rng = make_rng(3);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto n = uniform_int(rng, 2, 5);
        auto k = uniform_int(rng, 1, 3);
        auto g = oracle::random_simple_graph(rng, n, 0.6);
        std::vector<std::vector<LocalPair>> lists(g.edge_count());
        for (auto & list : lists)
            for (Colour a = 1 ; a <= k ; ++a)
                for (Colour b = 1 ; b <= k ; ++b)
                    if (uniform_int(rng, 0, 2) == 0)
                        list.push_back({ a, b });
        auto inst = conflict_lists_to_instance({ g, k, lists, std::nullopt });
        oracle::each_assignment(n, k, [&] (auto & c) {
                bool avoids = true;
                for (EdgeId e = 0 ; e < g.edge_count() ; ++e)
                    for (auto & p : lists[e])
                        if (c[g.edge(e).u] == p.at_u && c[g.edge(e).v] == p.at_v)
                            avoids = false;
                CHECK(oracle::valid(inst, c) == avoids);
                return false; });
    }
}

TEST_CASE("adaptable reduction examples")
{
    AdaptableInstance tri{ triangle(), { { 1, 2 }, { 1, 2 }, { 1, 2 } }, { 1, 1, 1 } };
    auto r = adaptable_to_conflict(tri);
    CHECK(r.instance.graph().edge_count() == 3);
    for (EdgeId e = 0 ; e < 3 ; ++e)
        CHECK(r.instance.pair(e) == LocalPair{ 1, 1 });
    CHECK(check_adapted(tri, { 2, 2, 2 }));
    CHECK_FALSE(check_adapted(tri, { 1, 1, 1 }));
    CHECK(r.decode({ 2, 2, 2 }) == ListColouring{ 2, 2, 2 });

    AdaptableInstance apart{ edge(), { { 1, 2 }, { 3, 4 } }, { 1 } };
    CHECK(adaptable_to_conflict(apart).instance.graph().edge_count() == 0);

    AdaptableInstance shared{ edge(), { { 1, 2 }, { 2, 3 } }, { 2 } };
    auto s = adaptable_to_conflict(shared);
    REQUIRE(s.instance.graph().edge_count() == 1);
    CHECK(s.instance.pair(0) == LocalPair{ 2, 1 });
    CHECK(s.decode({ 2, 1 }) == ListColouring{ 2, 2 });
    CHECK_FALSE(check_adapted(shared, s.decode({ 2, 1 })));

    CHECK_THROWS_AS(check_adapted(tri, { 3, 1, 1 }), InvalidInput);
    CHECK_THROWS_AS(AdaptableInstance(edge(), { { 1, 2 }, { 3 } }, { 1 }), InvalidInput);
}

TEST_CASE("proper colourings are adapted to every labelling")
{
    auto rng = make_rng(8);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = oracle::random_simple_graph(rng, 5, 0.5);
        ListAssignment lists(5);
        for (auto & l : lists)
            l = oracle::random_list(rng, 3, 5);
        std::vector<int> labels(g.edge_count());
        for (auto & l : labels)
            l = uniform_int(rng, 1, 5);
        AdaptableInstance a{ g, lists, labels };
        SeparationInstance s{ g, lists };
        for (auto & c : oracle::proper_colourings(s))
            CHECK(check_adapted(a, c));
    }
}

TEST_CASE("separation reduction examples")
{
    SeparationInstance one{ edge(), { { 1, 2 }, { 1, 3 } } };
    CHECK(check_separation(one));
    auto r = separation_to_conflict(one);
    REQUIRE(r.instance.graph().edge_count() == 1);
    CHECK(r.instance.pair(0) == LocalPair{ 1, 1 });
    CHECK(r.decode({ 2, 2 }) == ListColouring{ 2, 3 });
    CHECK(check_proper_list_colouring(one, { 2, 3 }));

    SeparationInstance apart{ edge(), { { 1, 2 }, { 3, 4 } } };
    CHECK(separation_to_conflict(apart).instance.graph().edge_count() == 0);

    SeparationInstance same{ edge(), { { 1, 2 }, { 1, 2 } } };
    CHECK_FALSE(check_separation(same));
    try {
        separation_to_conflict(same);
        FAIL("separation violation accepted");
    }
    catch (const InvalidInput & e) {
        CHECK(std::string{ e.what() }.find("edge 0") != std::string::npos);
    }

    CHECK(check_separation(SeparationInstance{ Multigraph(3), { { 1, 2 }, { 1, 2 }, { 1, 2 } } }));
    CHECK_THROWS_AS(SeparationInstance(Multigraph(2, { { 0, 1 }, { 0, 1 } }), { { 1 }, { 2 } }), InvalidInput);
}

TEST_CASE("reductions biject solution sets on random instances")
{
    auto rng = make_rng(2024);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto n = uniform_int(rng, 2, 6);
        auto k = uniform_int(rng, 1, 3);
        auto g = oracle::random_simple_graph(rng, n, 0.5);
        ListAssignment lists(n);
        for (auto & l : lists)
            l = oracle::random_list(rng, k, k + 2);
        std::vector<int> labels(g.edge_count());
        for (auto & l : labels)
            l = uniform_int(rng, 1, k + 2);

        AdaptableInstance a{ g, lists, labels };
        auto ra = adaptable_to_conflict(a);
        std::set<ListColouring> decoded;
        for (auto & c : oracle::valid_colourings(ra.instance)) {
            decoded.insert(ra.decode(c));
            CHECK(ra.encode(ra.decode(c)) == c);
        }
        CHECK(decoded == oracle::adapted_colourings(a));

        SeparationInstance s{ g, lists };
        if (! check_separation(s))
            continue;
        auto rs = separation_to_conflict(s);
        std::set<ListColouring> proper;
        for (auto & c : oracle::valid_colourings(rs.instance))
            proper.insert(rs.decode(c));
        CHECK(proper == oracle::proper_colourings(s));
    }
}
