#include "indec/graph.hpp"

#include "indec/error.hpp"

#include <string>

namespace indec {

SmallGraph SmallGraph::complete(std::size_t n)
{
    SmallGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

SmallGraph SmallGraph::from_edges(std::size_t n, const std::vector<Edge>& edges)
{
    SmallGraph g(n);
    for (const auto& e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

void SmallGraph::add_edge(Vertex u, Vertex v)
{
    if (u == v || u >= n_ || v >= n_)
        throw Error(ErrorKind::InvalidArgument,
                    "invalid edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    if (!adj_[u * n_ + v])
        ++edges_;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
}

void SmallGraph::remove_edge(Vertex u, Vertex v)
{
    if (u >= n_ || v >= n_ || u == v)
        return;
    if (adj_[u * n_ + v])
        --edges_;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
}

std::size_t SmallGraph::degree(Vertex v) const
{
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u)
        d += adj_[v * n_ + u];
    return d;
}

std::vector<Edge> SmallGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

std::vector<Edge> SmallGraph::non_edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

} // namespace indec
