#include "indec/blowup.hpp"

#include "indec/error.hpp"

#include <string>

namespace indec {

namespace {

std::uint32_t index_in_group(const Block& block, std::uint32_t group)
{
    if (group <= block.size() && block[group - 1].group == group)
        return block[group - 1].index;
    for (const auto& p : block)
        if (p.group == group)
            return p.index;
    throw Error(ErrorKind::InternalInvariant, "block misses group " + std::to_string(group));
}

std::uint32_t successor(std::size_t i, std::size_t k) { return static_cast<std::uint32_t>((i + 1) % k + 1); }

} // namespace

BlowupContext make_context(const Pattern& pattern)
{
    const std::size_t k = pattern.k();
    std::string missing;
    for (std::size_t i = 0; i < k; ++i)
        if (!td_constructible(k, pattern.part(i))) {
            missing += missing.empty() ? "" : ", ";
            missing += "a_" + std::to_string(i + 1) + "=" + std::to_string(pattern.part(i)) + " (MacNeish bound " +
                       std::to_string(macneish(pattern.part(i))) + ")";
        }
    if (!missing.empty())
        throw Error(ErrorKind::UnsupportedPattern, "pattern " + pattern.to_string() + " needs TD(" +
                                                       std::to_string(k) + ", a_i) for " + missing);

    BlowupContext ctx;
    ctx.pattern_ = pattern;
    ctx.m_ = pattern.product();
    std::size_t offset = 0;
    for (std::size_t i = 0; i < k; ++i) {
        ctx.designs_.push_back(make_td(k, pattern.part(i)));
        ctx.offsets_.push_back(offset);
        offset += ctx.part_size(i);
    }
    return ctx;
}

HostDescriptor BlowupContext::host() const
{
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < pattern_.k(); ++i)
        parts.push_back(part_size(i));
    return HostDescriptor::complete_multipartite(std::move(parts));
}

std::uint64_t BlowupContext::rank(const CellIndex& cell) const
{
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < pattern_.k(); ++i)
        r = r * pattern_.part(i) + (cell.coords[i] - 1);
    return r;
}

CellIndex BlowupContext::unrank(std::uint64_t r) const
{
    CellIndex cell;
    cell.coords.resize(pattern_.k());
    for (std::size_t i = pattern_.k(); i-- > 0;) {
        cell.coords[i] = static_cast<std::uint32_t>(r % pattern_.part(i) + 1);
        r /= pattern_.part(i);
    }
    return cell;
}

bool BlowupContext::in_bounds(const CellIndex& cell) const
{
    if (cell.coords.size() != pattern_.k())
        return false;
    for (std::size_t i = 0; i < pattern_.k(); ++i)
        if (cell.coords[i] < 1 || cell.coords[i] > pattern_.part(i))
            return false;
    return true;
}

std::vector<Vertex> BlowupContext::cell_vertices(std::size_t part, const CellIndex& cell) const
{
    const std::size_t a = pattern_.part(part);
    const std::size_t first = offsets_[part] + a * rank(cell);
    std::vector<Vertex> out(a);
    for (std::size_t t = 0; t < a; ++t)
        out[t] = static_cast<Vertex>(first + t);
    return out;
}

std::pair<std::size_t, CellIndex> BlowupContext::locate(Vertex v) const
{
    for (std::size_t i = pattern_.k(); i-- > 0;)
        if (v >= offsets_[i]) {
            const std::size_t local = v - offsets_[i];
            if (local >= part_size(i))
                break;
            return {i, unrank(local / pattern_.part(i))};
        }
    throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v + 1) + " is not in F*");
}

Codeword BlowupContext::codeword_at(std::uint64_t index) const
{
    return Codeword{unrank(index / m_), unrank(index % m_)};
}

FCopy decode_codeword(const BlowupContext& ctx, const Codeword& w)
{
    if (!ctx.in_bounds(w.b) || !ctx.in_bounds(w.c))
        throw Error(ErrorKind::InvalidArgument, "codeword out of bounds");
    const std::size_t k = ctx.pattern().k();
    FCopy copy;
    copy.codeword = w;
    copy.detailed.assign(k, CellIndex{std::vector<std::uint32_t>(k, 0)});
    for (std::size_t i = 0; i < k; ++i) {
        const auto own = static_cast<std::uint32_t>(i + 1);
        const auto next = successor(i, k);
        const Block& block = block_through(ctx.design(i), w.b.coords[i], own, w.c.coords[i], next);
        for (std::size_t part = 0; part < k; ++part)
            copy.detailed[part].coords[i] = index_in_group(block, static_cast<std::uint32_t>(part + 1));
        // The block rule must agree with the two defining coordinates.
        if (copy.detailed[i].coords[i] != w.b.coords[i] || copy.detailed[next - 1].coords[i] != w.c.coords[i])
            throw Error(ErrorKind::InternalInvariant, "block rule disagrees with codeword");
    }
    copy.classes.reserve(k);
    for (std::size_t part = 0; part < k; ++part)
        copy.classes.push_back(ctx.cell_vertices(part, copy.detailed[part]));
    return copy;
}

namespace reference {

Decomposition blowup_decompose(const BlowupContext& ctx)
{
    Decomposition d{ctx.host(), ctx.pattern(), {}, true};
    const std::uint64_t total = ctx.m() * ctx.m();
    d.copies.reserve(total);
    for (std::uint64_t w = 0; w < total; ++w)
        d.copies.push_back(decode_codeword(ctx, ctx.codeword_at(w)));
    return d;
}

} // namespace reference

Decomposition blowup_decompose(const BlowupContext& ctx)
{
    Decomposition d{ctx.host(), ctx.pattern(), {}, true};
    const auto total = static_cast<std::int64_t>(ctx.m() * ctx.m());
    d.copies.resize(static_cast<std::size_t>(total));
    bool failed = false;
    std::string failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < total; ++w) {
        try {
            d.copies[w] = decode_codeword(ctx, ctx.codeword_at(static_cast<std::uint64_t>(w)));
        } catch (const std::exception& e) {
#pragma omp critical(blowup_failure)
            if (!failed) {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed)
        throw Error(ErrorKind::InternalInvariant, failure);
    return d;
}

Decomposition blowup_decompose(const Pattern& pattern) { return blowup_decompose(make_context(pattern)); }

EdgeResolution edge_to_copy(const BlowupContext& ctx, Vertex u, Vertex v)
{
    const auto [part_u, cell_u] = ctx.locate(u);
    const auto [part_v, cell_v] = ctx.locate(v);
    if (part_u == part_v)
        throw Error(ErrorKind::SamePart, "vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1) +
                                             " lie in part " + std::to_string(part_u + 1));
    const std::size_t k = ctx.pattern().k();
    Codeword w{CellIndex{std::vector<std::uint32_t>(k)}, CellIndex{std::vector<std::uint32_t>(k)}};
    for (std::size_t l = 0; l < k; ++l) {
        const Block& block = block_through(ctx.design(l), cell_u.coords[l], static_cast<std::uint32_t>(part_u + 1),
                                           cell_v.coords[l], static_cast<std::uint32_t>(part_v + 1));
        w.b.coords[l] = index_in_group(block, static_cast<std::uint32_t>(l + 1));
        w.c.coords[l] = index_in_group(block, successor(l, k));
    }
    FCopy copy = decode_codeword(ctx, w);
    if (copy.detailed[part_u] != cell_u || copy.detailed[part_v] != cell_v)
        throw Error(ErrorKind::InternalInvariant, "recovered copy misses the edge");
    return {std::move(w), std::move(copy)};
}

} // namespace indec
