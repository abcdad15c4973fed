#include <conflict/io.hh>

#include <algorithm>
#include <fstream>
#include <numeric>

using namespace conflict;

using std::string;
using std::vector;

namespace
{
    template <typename Fn_>
    auto parsing(const string & what, Fn_ && fn)
    {
        try {
            return fn();
        }
        catch (const Json::exception & e) {
            throw InvalidInput{ "malformed " + what + ": " + e.what() };
        }
    }

    auto require_object(const Json & value, const string & what) -> void
    {
        if (! value.is_object())
            throw InvalidInput{ what + " must be a JSON object" };
    }

    auto integer(const Json & value, const char * key) -> int
    {
        auto & field = value.at(key);
        if (! field.is_number_integer())
            throw InvalidInput{ string{ "field '" } + key + "' must be an integer" };
        return field.get<int>();
    }

    // the edge records of value, in id order when ids are present
    auto edge_records(const Json & value) -> vector<const Json *>
    {
        auto & edges = value.at("edges");
        if (! edges.is_array())
            throw InvalidInput{ "field 'edges' must be an array" };

        vector<const Json *> records;
        for (auto & e : edges) {
            require_object(e, "edge record");
            records.push_back(&e);
        }

        bool all_ids = std::all_of(records.begin(), records.end(), [] (auto * e) { return e->contains("id"); });
        if (all_ids) {
            std::stable_sort(records.begin(), records.end(), [] (auto * a, auto * b) {
                    return integer(*a, "id") < integer(*b, "id"); });
            for (std::size_t i = 1 ; i < records.size() ; ++i)
                if (integer(*records[i - 1], "id") == integer(*records[i], "id"))
                    throw InvalidInput{ "duplicate edge id " + std::to_string(integer(*records[i], "id")) };
        }
        return records;
    }

    auto graph_from_json(const Json & value, const vector<const Json *> & records) -> Multigraph
    {
        auto n = integer(value, "n");
        if (n < 0)
            throw InvalidInput{ "vertex count must be nonnegative" };
        Multigraph graph(n);
        for (auto * e : records)
            graph.add_edge(integer(*e, "u"), integer(*e, "v"));
        return graph;
    }

    auto lists_from_json(const Json & value, int n) -> ListAssignment
    {
        auto & vertices = value.at("vertices");
        if (! vertices.is_array() || static_cast<int>(vertices.size()) != n)
            throw InvalidInput{ "field 'vertices' must hold one record per vertex" };
        ListAssignment lists;
        for (auto & v : vertices) {
            require_object(v, "vertex record");
            lists.push_back(v.at("list").get<vector<int>>());
        }
        return lists;
    }

    auto lists_to_json(const ListAssignment & lists) -> Json
    {
        auto vertices = Json::array();
        for (auto & list : lists)
            vertices.push_back({ { "list", list } });
        return vertices;
    }

    auto check_kind(const Json & value, const char * kind) -> void
    {
        if (value.contains("kind") && value.at("kind") != kind)
            throw InvalidInput{ string{ "expected an instance of kind '" } + kind + "'" };
    }
}

auto conflict::read_json_file(const std::filesystem::path & path) -> Json
{
    std::ifstream in{ path };
    if (! in)
        throw InvalidInput{ "cannot open " + path.string() };
    return parsing(path.string(), [&] { return Json::parse(in); });
}

auto conflict::write_json_file(const std::filesystem::path & path, const Json & value) -> void
{
    std::ofstream out{ path };
    if (! out)
        throw InvalidInput{ "cannot write " + path.string() };
    out << value.dump(2) << '\n';
}

auto conflict::instance_to_json(const ConflictInstance & instance) -> Json
{
    auto & graph = instance.graph();
    auto edges = Json::array();
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e)
        edges.push_back({ { "u", graph.edge(e).u }, { "v", graph.edge(e).v },
                { "lu", instance.pair(e).at_u }, { "lv", instance.pair(e).at_v } });
    return { { "k", instance.colours() }, { "n", graph.vertex_count() }, { "edges", std::move(edges) } };
}

auto conflict::instance_from_json(const Json & value) -> ConflictInstance
{
    return parsing("instance", [&] {
        require_object(value, "instance");
        auto records = edge_records(value);
        auto graph = graph_from_json(value, records);
        vector<LocalPair> pairs;
        for (auto * e : records)
            pairs.push_back({ integer(*e, "lu"), integer(*e, "lv") });
        return ConflictInstance{ std::move(graph), integer(value, "k"), std::move(pairs) };
    });
}

auto conflict::adaptable_to_json(const AdaptableInstance & instance) -> Json
{
    auto & graph = instance.graph();
    auto edges = Json::array();
    for (EdgeId e = 0 ; e < graph.edge_count() ; ++e)
        edges.push_back({ { "u", graph.edge(e).u }, { "v", graph.edge(e).v }, { "label", instance.label(e) } });
    return { { "kind", "adaptable" }, { "k", instance.list_size() }, { "n", graph.vertex_count() },
        { "vertices", lists_to_json(instance.lists()) }, { "edges", std::move(edges) } };
}

auto conflict::adaptable_from_json(const Json & value) -> AdaptableInstance
{
    return parsing("adaptable instance", [&] {
        require_object(value, "adaptable instance");
        check_kind(value, "adaptable");
        auto records = edge_records(value);
        auto graph = graph_from_json(value, records);
        vector<int> labels;
        for (auto * e : records)
            labels.push_back(integer(*e, "label"));
        auto lists = lists_from_json(value, graph.vertex_count());
        return AdaptableInstance{ std::move(graph), std::move(lists), std::move(labels) };
    });
}

auto conflict::separation_to_json(const SeparationInstance & instance) -> Json
{
    auto & graph = instance.graph();
    auto edges = Json::array();
    for (auto & e : graph.edges())
        edges.push_back({ { "u", e.u }, { "v", e.v } });
    return { { "kind", "separation" }, { "k", instance.list_size() }, { "n", graph.vertex_count() },
        { "vertices", lists_to_json(instance.lists()) }, { "edges", std::move(edges) } };
}

auto conflict::separation_from_json(const Json & value) -> SeparationInstance
{
    return parsing("separation instance", [&] {
        require_object(value, "separation instance");
        check_kind(value, "separation");
        auto records = edge_records(value);
        auto graph = graph_from_json(value, records);
        auto lists = lists_from_json(value, graph.vertex_count());
        return SeparationInstance{ std::move(graph), std::move(lists) };
    });
}

auto conflict::colouring_to_json(const Colouring & colouring) -> Json
{
    return { { "colouring", colouring } };
}

auto conflict::colouring_from_json(const Json & value) -> Colouring
{
    return parsing("colouring", [&] {
        auto & array = value.is_object() ? value.at("colouring") : value;
        if (! array.is_array())
            throw InvalidInput{ "a colouring must be an array of integers" };
        Colouring result;
        for (auto & c : array) {
            if (! c.is_number_integer())
                throw InvalidInput{ "a colouring must be an array of integers" };
            result.push_back(c.get<int>());
        }
        return result;
    });
}

auto conflict::stats_to_json(const GraphStats & stats) -> Json
{
    return { { "n", stats.n }, { "m", stats.m }, { "max_multiplicity", stats.max_multiplicity },
        { "max_degree", stats.max_degree }, { "average_degree", stats.average_degree } };
}
