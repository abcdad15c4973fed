#ifndef CONFLICT_REDUCTIONS_HH
#define CONFLICT_REDUCTIONS_HH

#include <conflict/instance.hh>

#include <optional>
#include <vector>

namespace conflict
{
    /// Per-vertex colour lists. Entries are positive and distinct within a list.
    using ListAssignment = std::vector<std::vector<int>>;

    /// A list colouring: actual list colours, not positions.
    using ListColouring = std::vector<int>;

    /**
     * Conflicts given as sets of ordered pairs on the edges of a simple graph;
     * conflicts[e] holds the pairs for edge e, oriented as the edge is stored.
     */
    struct ConflictListAssignment
    {
        Multigraph graph;
        int k = 1;
        std::vector<std::vector<LocalPair>> conflicts;
        std::optional<int> multiplicity_bound;
    };

    class AdaptableInstance
    {
        private:
            Multigraph _graph;
            ListAssignment _lists;
            std::vector<int> _labels;
            int _k = 0;

        public:
            AdaptableInstance(Multigraph graph, ListAssignment lists, std::vector<int> labels);

            auto graph() const -> const Multigraph & { return _graph; }
            auto lists() const -> const ListAssignment & { return _lists; }
            auto list(VertexId v) const -> const std::vector<int> & { return _lists[v]; }
            auto labels() const -> const std::vector<int> & { return _labels; }
            auto label(EdgeId e) const -> int { return _labels[e]; }
            auto list_size() const -> int { return _k; }
    };

    /// Lists on a simple graph. Maximum separation is checked by
    /// check_separation and enforced by separation_to_conflict, not here.
    class SeparationInstance
    {
        private:
            Multigraph _graph;
            ListAssignment _lists;
            int _k = 0;

        public:
            SeparationInstance(Multigraph graph, ListAssignment lists);

            auto graph() const -> const Multigraph & { return _graph; }
            auto lists() const -> const ListAssignment & { return _lists; }
            auto list(VertexId v) const -> const std::vector<int> & { return _lists[v]; }
            auto list_size() const -> int { return _k; }
    };

    /**
     * A conflict instance produced from a list problem. Instance colour i at v
     * stands for the i-th entry of v's list. Edges without a constraint are
     * dropped, so edge_origin maps instance edges back to source edges.
     */
    struct ListReduction
    {
        ConflictInstance instance;
        ListAssignment lists;
        std::vector<EdgeId> edge_origin;

        auto decode(const Colouring & colouring) const -> ListColouring;
        auto encode(const ListColouring & colouring) const -> Colouring;
    };

    auto conflict_lists_to_instance(const ConflictListAssignment & assignment) -> ConflictInstance;

    auto adaptable_to_conflict(const AdaptableInstance & instance) -> ListReduction;

    auto separation_to_conflict(const SeparationInstance & instance) -> ListReduction;

    /// No edge has c(u) = c(v) = label(e). Throws if some c(v) is not in L(v).
    auto check_adapted(const AdaptableInstance & instance, const ListColouring & colouring) -> bool;

    auto check_separation(const SeparationInstance & instance) -> bool;

    /// Proper and drawn from the lists. Throws if some c(v) is not in L(v).
    auto check_proper_list_colouring(const SeparationInstance & instance, const ListColouring & colouring) -> bool;
}

#endif
