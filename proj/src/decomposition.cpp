#include "indec/decomposition.hpp"

#include <algorithm>

namespace indec {

std::size_t HostDescriptor::order() const
{
    std::size_t n = 0;
    for (auto s : parts)
        n += s;
    return n;
}

std::vector<std::size_t> HostDescriptor::part_of() const
{
    std::vector<std::size_t> owner;
    owner.reserve(order());
    for (std::size_t i = 0; i < parts.size(); ++i)
        owner.insert(owner.end(), parts[i], i);
    return owner;
}

SmallGraph HostDescriptor::to_graph() const
{
    const auto owner = part_of();
    SmallGraph g(owner.size());
    for (Vertex u = 0; u < owner.size(); ++u)
        for (Vertex v = u + 1; v < owner.size(); ++v)
            if (owner[u] != owner[v])
                g.add_edge(u, v);
    for (const auto& e : non_edges)
        g.remove_edge(e.u, e.v);
    return g;
}

HostDescriptor HostDescriptor::complete_multipartite(std::vector<std::size_t> parts)
{
    return HostDescriptor{std::move(parts), {}};
}

HostDescriptor HostDescriptor::of_graph(const SmallGraph& g)
{
    return HostDescriptor{std::vector<std::size_t>(g.order(), 1), g.non_edges()};
}

std::vector<Edge> copy_edges(const FCopy& copy)
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < copy.classes.size(); ++i)
        for (std::size_t j = i + 1; j < copy.classes.size(); ++j)
            for (auto u : copy.classes[i])
                for (auto v : copy.classes[j])
                    out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace indec
