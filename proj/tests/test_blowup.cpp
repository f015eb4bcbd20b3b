#include "indec/blowup.hpp"
#include "indec/error.hpp"
#include "indec/oracle.hpp"

#include "doctest.h"
#include "expect.hpp"

#include <map>
#include <set>

using namespace indec;

namespace {

std::vector<Pattern> small_patterns()
{
    std::vector<Pattern> out;
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b) {
            out.emplace_back(std::vector<std::size_t>{a, b});
            for (std::size_t c = 1; c <= 3; ++c)
                out.emplace_back(std::vector<std::size_t>{a, b, c});
        }
    return out;
}

bool contains_edge(const FCopy& copy, Vertex u, Vertex v)
{
    const Edge target(u, v);
    for (const auto& e : copy_edges(copy))
        if (e == target)
            return true;
    return false;
}

} // namespace

TEST_CASE("contexts")
{
    auto ctx = make_context(Pattern({1, 2}));
    CHECK(ctx.m() == 2);
    CHECK(ctx.part_size(0) == 2);
    CHECK(ctx.part_size(1) == 4);
    CHECK(ctx.part_offset(1) == 2);

    auto ctx222 = make_context(Pattern({2, 2, 2}));
    CHECK(ctx222.m() == 8);
    CHECK(verify_td(ctx222.design(0)).ok());
    CHECK(ctx222.design(0).blocksize() == 3);

    CHECK(kind_of([] { make_context(Pattern({1, 1, 1, 6})); }) == ErrorKind::UnsupportedPattern);
    try {
        make_context(Pattern({6, 1, 1, 6}));
    } catch (const Error& e) {
        const std::string what = e.what();
        CHECK(what.find("6") != std::string::npos);
    }
}

TEST_CASE("cell ranks")
{
    auto ctx = make_context(Pattern({2, 3}));
    for (std::uint64_t r = 0; r < ctx.m(); ++r)
        CHECK(ctx.rank(ctx.unrank(r)) == r);
    CHECK(ctx.unrank(0).coords == std::vector<std::uint32_t>{1, 1});
    CHECK(ctx.unrank(1).coords == std::vector<std::uint32_t>{1, 2});
    CHECK(ctx.unrank(3).coords == std::vector<std::uint32_t>{2, 1});
    CHECK(ctx.cell_vertices(0, ctx.unrank(1)) == std::vector<Vertex>{2, 3});
    CHECK(ctx.cell_vertices(1, ctx.unrank(1)) == std::vector<Vertex>{12 + 3, 12 + 4, 12 + 5});
    CHECK_FALSE(ctx.in_bounds(CellIndex{{3, 1}}));
    for (Vertex v = 0; v < ctx.host().order(); ++v) {
        auto [part, cell] = ctx.locate(v);
        auto cells = ctx.cell_vertices(part, cell);
        CHECK(std::find(cells.begin(), cells.end(), v) != cells.end());
    }
}

TEST_CASE("decoding codewords")
{
    auto ctx = make_context(Pattern({1, 2}));
    Codeword w{CellIndex{{1, 1}}, CellIndex{{1, 1}}};
    auto copy = decode_codeword(ctx, w);
    REQUIRE(copy.detailed.size() == 2);
    CHECK(copy.detailed[0].coords == std::vector<std::uint32_t>{1, 1});
    CHECK(copy.detailed[1].coords == std::vector<std::uint32_t>{1, 1});
    CHECK(copy.classes == std::vector<std::vector<Vertex>>{{0}, {2, 3}});

    auto single = blowup_decompose(Pattern({1, 1}));
    REQUIRE(single.copies.size() == 1);
    CHECK(single.copies[0].classes == std::vector<std::vector<Vertex>>{{0}, {1}});

    // Both defining coordinates of every codeword of (2,2,2) survive decoding.
    auto ctx222 = make_context(Pattern({2, 2, 2}));
    for (std::uint64_t idx = 0; idx < ctx222.m() * ctx222.m(); ++idx) {
        auto cw = ctx222.codeword_at(idx);
        auto c = decode_codeword(ctx222, cw);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(c.detailed[i].coords[i] == cw.b.coords[i]);
            CHECK(c.detailed[(i + 1) % 3].coords[i] == cw.c.coords[i]);
            CHECK(ctx222.in_bounds(c.detailed[i]));
        }
    }
}

TEST_CASE("decompositions of the blow-up")
{
    auto d = blowup_decompose(Pattern({1, 2}));
    CHECK(d.copies.size() == 4);
    CHECK(d.host.order() == 6);
    CHECK(verify_decomposition(d.host.to_graph(), d.pattern, d.copies, true).ok());

    // m = 4, so F* = K_{8,8} with 16 copies of C4.
    auto d22 = blowup_decompose(Pattern({2, 2}));
    CHECK(d22.copies.size() == 16);
    CHECK(d22.host.to_graph().edge_count() == 64);
    CHECK(verify_decomposition(d22.host.to_graph(), d22.pattern, d22.copies, true).ok());
}

TEST_CASE("every constructible small pattern decomposes, serial and parallel alike")
{
    for (const auto& pattern : small_patterns()) {
        CAPTURE(pattern.to_string());
        auto ctx = make_context(pattern);
        auto d = blowup_decompose(ctx);
        const auto m = ctx.m();
        CHECK(d.copies.size() == m * m);

        auto g = d.host.to_graph();
        std::uint64_t cross = 0;
        for (std::size_t i = 0; i < pattern.k(); ++i)
            for (std::size_t j = i + 1; j < pattern.k(); ++j)
                cross += ctx.part_size(i) * ctx.part_size(j);
        CHECK(m * m * pattern.edge_count() == cross);
        CHECK(g.edge_count() == cross);
        CHECK(verify_decomposition(g, pattern, d.copies, true).ok());

        auto ref = reference::blowup_decompose(ctx);
        REQUIRE(ref.copies.size() == d.copies.size());
        bool same = true;
        for (std::size_t i = 0; i < d.copies.size(); ++i)
            same &= ref.copies[i].classes == d.copies[i].classes &&
                    ref.copies[i].codeword == d.copies[i].codeword;
        CHECK(same);

        for (std::size_t i = 1; i < d.copies.size(); ++i)
            CHECK(*d.copies[i - 1].codeword < *d.copies[i].codeword);
    }
}

TEST_CASE("edge_to_copy inverts decoding")
{
    for (const auto& parts : std::vector<std::vector<std::size_t>>{{1, 2}, {2, 2, 2}, {2, 3}, {1, 2, 3}}) {
        Pattern pattern(parts);
        CAPTURE(pattern.to_string());
        auto ctx = make_context(pattern);
        auto d = blowup_decompose(ctx);
        std::map<Codeword, std::size_t> index;
        for (std::size_t i = 0; i < d.copies.size(); ++i)
            index[*d.copies[i].codeword] = i;

        std::set<Codeword> hit;
        bool all_ok = true;
        for (const auto& e : d.host.to_graph().edges()) {
            auto res = edge_to_copy(ctx, e.u, e.v);
            all_ok &= contains_edge(res.copy, e.u, e.v);
            all_ok &= d.copies[index.at(res.codeword)].classes == res.copy.classes;
            hit.insert(res.codeword);
        }
        CHECK(all_ok);
        CHECK(hit.size() == ctx.m() * ctx.m());

        // Every edge of a decoded copy points back at its codeword.
        bool consistent = true;
        for (const auto& copy : d.copies)
            for (const auto& e : copy_edges(copy))
                consistent &= edge_to_copy(ctx, e.u, e.v).codeword == *copy.codeword;
        CHECK(consistent);
    }

    auto ctx = make_context(Pattern({1, 2}));
    auto first = edge_to_copy(ctx, 0, 2);
    CHECK(contains_edge(first.copy, 0, 2));
    CHECK(kind_of([&] { edge_to_copy(ctx, 2, 3); }) == ErrorKind::SamePart);
}
