#ifndef CONFLICT_GRAPH_ENUM_HH
#define CONFLICT_GRAPH_ENUM_HH

#include <conflict/graph.hh>

#include <cstdint>
#include <vector>

namespace conflict
{
    /// Simple graphs on at most 8 vertices as adjacency bitmasks; bit
    /// j(j-1)/2 + i stands for the pair i < j.
    using AdjacencyMask = std::uint32_t;

    auto pair_bit(int i, int j) -> int;

    auto mask_of(const Multigraph & graph) -> AdjacencyMask;

    /// Edges in increasing bit order.
    auto graph_of(int n, AdjacencyMask mask) -> Multigraph;

    /// Least mask over relabellings that respect a degree-based vertex
    /// refinement, so isomorphic graphs share it.
    auto canonical_mask(int n, AdjacencyMask mask) -> AdjacencyMask;

    /// One representative per isomorphism class of simple graphs on n
    /// vertices, n <= 6.
    auto all_graphs(int n) -> std::vector<Multigraph>;

    /// One representative per isomorphism class of triangulations on n
    /// vertices (3 <= n <= 8), collected by a random flip walk.
    auto all_triangulations(int n) -> std::vector<Multigraph>;

    /// One representative per isomorphism class of planar graphs on n
    /// vertices (n <= 7), as spanning subgraphs of triangulations.
    auto all_planar_graphs(int n) -> std::vector<Multigraph>;
}

#endif
