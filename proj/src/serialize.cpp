#include "indec/serialize.hpp"

#include "indec/error.hpp"

#include <istream>
#include <sstream>

namespace indec {

using nlohmann::json;

namespace {

json vertex_list(const std::vector<Vertex>& vs)
{
    json out = json::array();
    for (auto v : vs)
        out.push_back(v + 1);
    return out;
}

json edge_pairs(const std::vector<Edge>& edges)
{
    json out = json::array();
    for (const auto& e : edges)
        out.push_back({e.u + 1, e.v + 1});
    return out;
}

json copy_list(const std::vector<FCopy>& copies)
{
    json out = json::array();
    for (const auto& copy : copies) {
        json c;
        if (copy.codeword)
            c["codeword"] = {{"b", copy.codeword->b.coords}, {"c", copy.codeword->c.coords}};
        json classes = json::array();
        for (const auto& cls : copy.classes)
            classes.push_back(vertex_list(cls));
        c["classes"] = std::move(classes);
        out.push_back(std::move(c));
    }
    return out;
}

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorKind::InvalidArgument, "malformed decomposition JSON: " + what);
}

} // namespace

json to_json(const LatinSquare& square)
{
    json grid = json::array();
    for (std::size_t r = 1; r <= square.order(); ++r) {
        json row = json::array();
        for (std::size_t c = 1; c <= square.order(); ++c)
            row.push_back(square.at(r, c));
        grid.push_back(std::move(row));
    }
    return {{"order", square.order()}, {"grid", std::move(grid)}};
}

json to_json(const MolsFamily& family)
{
    json squares = json::array();
    for (const auto& s : family.squares)
        squares.push_back(to_json(s));
    return {{"order", family.order}, {"count", family.size()}, {"squares", std::move(squares)}};
}

json to_json(const TransversalDesign& td)
{
    json groups = json::array();
    for (std::uint32_t g = 1; g <= td.blocksize(); ++g) {
        json group = json::array();
        for (std::uint32_t i = 1; i <= td.groupsize(); ++i)
            group.push_back(point_id({g, i}));
        groups.push_back(std::move(group));
    }
    json blocks = json::array();
    for (const auto& block : td.blocks()) {
        json b = json::array();
        for (const auto& p : block)
            b.push_back(point_id(p));
        blocks.push_back(std::move(b));
    }
    return {{"k", td.blocksize()}, {"n", td.groupsize()}, {"groups", std::move(groups)}, {"blocks", std::move(blocks)}};
}

json to_json(const Decomposition& d)
{
    json host = {{"parts", d.host.parts}};
    if (!d.host.non_edges.empty())
        host["non_edges"] = edge_pairs(d.host.non_edges);
    return {{"host", std::move(host)},
            {"pattern", d.pattern.parts()},
            {"copies", copy_list(d.copies)},
            {"induced", d.induced}};
}

json to_json(const EmbeddedDecomposition& d)
{
    json out = to_json(d.base);
    json cells = json::array();
    for (const auto& part : d.cells) {
        json list = json::array();
        for (const auto& cell : part)
            list.push_back(vertex_list(cell));
        cells.push_back(std::move(list));
    }
    out["cells"] = std::move(cells);
    out["p"] = d.p;
    return out;
}

json to_json(const DenseCertificate& cert)
{
    const auto& params = cert.params;
    json non_edges;
    if (cert.non_edges_listed)
        non_edges = edge_pairs(cert.non_edges);
    else
        non_edges = {{"structural",
                      {{"independent_sets", params.n_prime},
                       {"set_size", params.p},
                       {"isolated", params.t},
                       {"count", cert.non_edge_count}}}};
    return {{"n", params.n},
            {"pattern", cert.pattern.parts()},
            {"params",
             {{"p", params.p},
              {"q", params.q},
              {"r", params.r},
              {"s", params.s},
              {"t", params.t},
              {"n_prime", params.n_prime}}},
            {"non_edges", std::move(non_edges)},
            {"copies", copy_list(cert.decomposition.copies)},
            {"bound", {{"lhs", cert.bound_lhs}, {"rhs", static_cast<double>(cert.bound_rhs_twice) / 2.0}}}};
}

json to_json(const CexResult& cex)
{
    return {{"n", cex.n},
            {"pattern", cex.decomposition.pattern.parts()},
            {"cex", cex.value},
            {"edges", cex.witness.edge_count()},
            {"witness", edge_pairs(cex.witness.edges())},
            {"copies", copy_list(cex.decomposition.copies)}};
}

Decomposition decomposition_from_json(const json& j)
{
    if (!j.is_object())
        malformed("top level is not an object");
    if (!j.contains("pattern") || !j["pattern"].is_array())
        malformed("missing pattern");
    if (!j.contains("copies") || !j["copies"].is_array())
        malformed("missing copies");
    Decomposition d;
    try {
        d.pattern = Pattern(j["pattern"].get<std::vector<std::size_t>>());
        if (j.contains("host") && j["host"].contains("parts"))
            d.host.parts = j["host"]["parts"].get<std::vector<std::size_t>>();
        if (j.contains("host") && j["host"].contains("non_edges"))
            for (const auto& e : j["host"]["non_edges"]) {
                auto u = e.at(0).get<std::int64_t>(), v = e.at(1).get<std::int64_t>();
                if (u < 1 || v < 1 || u == v)
                    malformed("bad host non-edge");
                d.host.non_edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            }
        if (j.contains("induced"))
            d.induced = j["induced"].get<bool>();
        for (const auto& c : j["copies"]) {
            FCopy copy;
            for (const auto& cls : c.at("classes")) {
                std::vector<Vertex> vs;
                for (const auto& v : cls) {
                    auto id = v.get<std::int64_t>();
                    if (id < 1)
                        malformed("vertex ids are 1-based");
                    vs.push_back(static_cast<Vertex>(id - 1));
                }
                copy.classes.push_back(std::move(vs));
            }
            if (c.contains("codeword")) {
                Codeword w;
                w.b.coords = c["codeword"].at("b").get<std::vector<std::uint32_t>>();
                w.c.coords = c["codeword"].at("c").get<std::vector<std::uint32_t>>();
                copy.codeword = std::move(w);
            }
            d.copies.push_back(std::move(copy));
        }
    } catch (const json::exception& e) {
        malformed(e.what());
    }
    return d;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string to_edge_list(const SmallGraph& g)
{
    std::ostringstream out;
    out << "# vertices " << g.order() << "\n";
    for (const auto& e : g.edges())
        out << e.u + 1 << " " << e.v + 1 << "\n";
    return out.str();
}

SmallGraph parse_edge_list(std::istream& in)
{
    std::vector<Edge> edges;
    std::size_t declared = 0;
    bool has_header = false;
    std::size_t largest = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string first;
        if (!(row >> first))
            continue;
        if (first.front() == '#') {
            std::string key;
            std::size_t value;
            std::istringstream header(line.substr(1));
            if (header >> key >> value && key == "vertices") {
                declared = value;
                has_header = true;
            }
            continue;
        }
        long long u = 0, v = 0;
        std::istringstream pair(line);
        std::string extra;
        if (!(pair >> u >> v) || (pair >> extra) || u < 1 || v < 1 || u == v)
            throw Error(ErrorKind::InvalidArgument, "bad edge on line " + std::to_string(line_no));
        edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        largest = std::max<std::size_t>(largest, static_cast<std::size_t>(std::max(u, v)));
    }
    if (has_header && largest > declared)
        throw Error(ErrorKind::InvalidArgument, "edge endpoint exceeds declared vertex count");
    return SmallGraph::from_edges(has_header ? declared : largest, edges);
}

} // namespace indec
