#include "indec/embedded.hpp"

#include "indec/designs.hpp"
#include "indec/error.hpp"

#include <algorithm>
#include <string>

namespace indec {

EmbeddedDecomposition embedded_decompose(const Pattern& pattern, std::size_t p)
{
    const std::size_t k = pattern.k();
    if (p == 0)
        throw Error(ErrorKind::InvalidArgument, "p must be positive");
    if (!td_constructible(k, p))
        throw Error(ErrorKind::UnsupportedP, "TD(" + std::to_string(k) + "," + std::to_string(p) +
                                                 ") needs " + std::to_string(k - 2) + " MOLS of order " +
                                                 std::to_string(p) + "; MacNeish bound is " +
                                                 std::to_string(macneish(p)));
    const auto td = make_td(k, p);

    EmbeddedDecomposition out;
    out.p = p;
    std::vector<std::size_t> parts;
    std::size_t offset = 0;
    out.cells.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t a = pattern.part(i);
        parts.push_back(p * a);
        for (std::size_t j = 0; j < p; ++j) {
            std::vector<Vertex> cell(a);
            for (std::size_t t = 0; t < a; ++t)
                cell[t] = static_cast<Vertex>(offset + j * a + t);
            out.cells[i].push_back(std::move(cell));
        }
        offset += p * a;
    }
    out.base = Decomposition{HostDescriptor::complete_multipartite(std::move(parts)), pattern, {}, true};
    out.base.copies.reserve(td.blocks().size());
    for (const auto& block : td.blocks()) {
        FCopy copy;
        copy.classes.resize(k);
        for (const auto& point : block)
            copy.classes[point.group - 1] = out.cells[point.group - 1][point.index - 1];
        out.base.copies.push_back(std::move(copy));
    }
    return out;
}

VerifyReport verify_embedded(const EmbeddedDecomposition& d)
{
    auto fail = [](std::string kind, std::string msg, std::optional<std::size_t> copy = std::nullopt) {
        return VerifyReport{Violation{std::move(kind), std::move(msg), {}, copy}};
    };
    const auto& pattern = d.base.pattern;
    const std::size_t k = pattern.k();
    if (d.base.copies.size() != d.p * d.p)
        return fail("copy_count", std::to_string(d.base.copies.size()) + " copies, expected p^2 = " +
                                      std::to_string(d.p * d.p));

    const auto& host_parts = d.base.host.parts;
    if (host_parts.size() != k || d.cells.size() != k)
        return fail("cell_layout", "host or cell list does not have k parts");
    std::size_t offset = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (host_parts[i] != d.p * pattern.part(i) || d.cells[i].size() != d.p)
            return fail("cell_layout", "part " + std::to_string(i + 1) + " is not p cells of size a_i");
        for (std::size_t j = 0; j < d.p; ++j) {
            const auto& cell = d.cells[i][j];
            if (cell.size() != pattern.part(i))
                return fail("cell_layout", "part " + std::to_string(i + 1) + " has a cell of wrong size");
            for (std::size_t t = 0; t < cell.size(); ++t)
                if (cell[t] != offset + j * pattern.part(i) + t)
                    return fail("cell_layout", "cell " + std::to_string(j + 1) + " of part " +
                                                   std::to_string(i + 1) + " is not its consecutive block");
        }
        offset += host_parts[i];
    }

    for (std::size_t c = 0; c < d.base.copies.size(); ++c) {
        const auto& classes = d.base.copies[c].classes;
        if (classes.size() != k)
            return fail("class_sizes", "copy " + std::to_string(c) + " has wrong number of classes", c);
        for (std::size_t i = 0; i < k; ++i) {
            auto cls = classes[i];
            std::sort(cls.begin(), cls.end());
            if (std::find(d.cells[i].begin(), d.cells[i].end(), cls) == d.cells[i].end())
                return fail("class_not_a_cell",
                            "copy " + std::to_string(c) + " class " + std::to_string(i + 1) + " is not a cell", c);
        }
    }
    return verify_decomposition(d.base.host.to_graph(), pattern, d.base.copies, true);
}

StarParameters star_parameters(const Pattern& pattern, std::uint64_t cap)
{
    const std::size_t k = pattern.k();
    const std::uint64_t m = pattern.product();
    for (std::uint64_t p = m; p <= cap; p += m) {
        if (p <= 1 || !td_constructible(k, p))
            continue;
        bool all = true;
        for (auto a : pattern.parts())
            if (!td_constructible(k, p * a)) {
                all = false;
                break;
            }
        if (!all)
            continue;
        std::vector<std::size_t> amplified;
        for (auto a : pattern.parts())
            amplified.push_back(static_cast<std::size_t>(p * a));
        return StarParameters{p, Pattern(std::move(amplified))};
    }
    throw Error(ErrorKind::SearchExhausted,
                "no admissible p* <= " + std::to_string(cap) + " for pattern " + pattern.to_string());
}

} // namespace indec
