#pragma once

#include "indec/graph.hpp"
#include "indec/pattern.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace indec {

/// Cell coordinates (j_1, ..., j_k), 1 <= j_i <= a_i.
struct CellIndex {
    std::vector<std::uint32_t> coords;

    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Length-2k label (b, c) of one copy in the blow-up decomposition.
struct Codeword {
    CellIndex b;
    CellIndex c;

    friend auto operator<=>(const Codeword&, const Codeword&) = default;
};

/// One copy of the pattern inside a host. classes[i] holds the vertices of
/// the copy's i-th class, sorted ascending. The codeword and detailed cell
/// representation are only present for blow-up copies.
struct FCopy {
    std::optional<Codeword> codeword;
    std::vector<CellIndex> detailed;
    std::vector<std::vector<Vertex>> classes;
};

/// Complete multipartite graph on consecutive vertex blocks of the given
/// sizes, minus an explicit list of extra non-edges. A complete graph is all
/// singleton parts; an isolated vertex is a singleton part whose pairs are
/// all listed as non-edges.
struct HostDescriptor {
    std::vector<std::size_t> parts;
    std::vector<Edge> non_edges;

    std::size_t order() const;
    SmallGraph to_graph() const;
    /// Part index of each vertex.
    std::vector<std::size_t> part_of() const;

    static HostDescriptor complete_multipartite(std::vector<std::size_t> parts);
    /// Describes an arbitrary graph as K_n minus its non-edges.
    static HostDescriptor of_graph(const SmallGraph& g);
};

struct Decomposition {
    HostDescriptor host;
    Pattern pattern;
    std::vector<FCopy> copies;
    bool induced = false;
};

/// Edges of a copy: all cross-class pairs.
std::vector<Edge> copy_edges(const FCopy& copy);

} // namespace indec
