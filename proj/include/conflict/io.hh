#ifndef CONFLICT_IO_HH
#define CONFLICT_IO_HH

#include <conflict/instance.hh>
#include <conflict/reductions.hh>

#include <json.hpp>

#include <filesystem>

namespace conflict
{
    using Json = nlohmann::json;

    /// Tag carried by every machine-readable report.
    inline constexpr const char * report_schema = "conflictcol/1";

    // All readers throw InvalidInput for malformed or out-of-range data.

    auto read_json_file(const std::filesystem::path & path) -> Json;
    auto write_json_file(const std::filesystem::path & path, const Json & value) -> void;

    /// { "k", "n", "edges": [ { "u", "v", "lu", "lv" } ] }. Edge records may
    /// carry an "id"; when every record has one they are renumbered by it.
    auto instance_to_json(const ConflictInstance & instance) -> Json;
    auto instance_from_json(const Json & value) -> ConflictInstance;

    /// The instance format with "kind": "adaptable", a "list" per entry of
    /// "vertices" and a "label" per edge. The k and lu/lv fields are unused.
    auto adaptable_to_json(const AdaptableInstance & instance) -> Json;
    auto adaptable_from_json(const Json & value) -> AdaptableInstance;

    /// As above with "kind": "separation" and no labels.
    auto separation_to_json(const SeparationInstance & instance) -> Json;
    auto separation_from_json(const Json & value) -> SeparationInstance;

    /// { "colouring": [ ... ] }, also accepting a bare array.
    auto colouring_to_json(const Colouring & colouring) -> Json;
    auto colouring_from_json(const Json & value) -> Colouring;

    auto stats_to_json(const GraphStats & stats) -> Json;
}

#endif
