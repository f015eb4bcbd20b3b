#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace indec {

/// 0-based vertex id. Serialized forms are 1-based.
using Vertex = std::uint32_t;

/// Unordered vertex pair, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 stored as a dense adjacency
/// matrix.
class SmallGraph {
public:
    SmallGraph() = default;
    explicit SmallGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    static SmallGraph complete(std::size_t n);
    static SmallGraph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::size_t degree(Vertex v) const;
    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;
    std::vector<Edge> non_edges() const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint8_t> adj_;
};

} // namespace indec
