#include "indec/blowup.hpp"
#include "indec/embedded.hpp"
#include "indec/error.hpp"

#include "doctest.h"
#include "expect.hpp"

using namespace indec;

TEST_CASE("embedded decompositions")
{
    auto k2 = embedded_decompose(Pattern({1, 1}), 3);
    CHECK(k2.base.copies.size() == 9);
    CHECK(k2.base.host.to_graph().edge_count() == 9);
    CHECK(verify_embedded(k2).ok());

    auto path = embedded_decompose(Pattern({1, 2}), 3);
    CHECK(path.base.copies.size() == 9);
    CHECK(path.base.host.to_graph().edge_count() == 18);
    CHECK(verify_embedded(path).ok());
    CHECK(path.cells[1][0] == std::vector<Vertex>{3, 4});

    auto big = embedded_decompose(Pattern({2, 2, 2}), 6);
    CHECK(big.base.copies.size() == 36);
    CHECK(verify_embedded(big).ok());

    CHECK(kind_of([] { embedded_decompose(Pattern({1, 1, 1, 1}), 6); }) == ErrorKind::UnsupportedP);
}

TEST_CASE("every class is a cell")
{
    for (const auto& parts : std::vector<std::vector<std::size_t>>{{1, 2}, {2, 3}, {1, 1, 2}, {2, 2, 2}})
        for (std::size_t p : {2, 3, 4, 5}) {
            Pattern pattern(parts);
            if (!td_constructible(pattern.k(), p))
                continue;
            CAPTURE(pattern.to_string());
            CAPTURE(p);
            auto d = embedded_decompose(pattern, p);
            REQUIRE(verify_embedded(d).ok());
            CHECK(d.base.copies.size() == p * p);
            std::uint64_t cross = 0;
            for (std::size_t i = 0; i < pattern.k(); ++i)
                for (std::size_t j = i + 1; j < pattern.k(); ++j)
                    cross += p * pattern.part(i) * p * pattern.part(j);
            CHECK(d.base.host.to_graph().edge_count() == cross);
            for (const auto& copy : d.base.copies)
                for (std::size_t i = 0; i < pattern.k(); ++i) {
                    const auto& cells = d.cells[i];
                    CHECK(std::find(cells.begin(), cells.end(), copy.classes[i]) != cells.end());
                }
        }
}

TEST_CASE("tampered embedded decompositions are rejected")
{
    auto d = embedded_decompose(Pattern({1, 2}), 3);

    SUBCASE("class shifted by one vertex")
    {
        for (auto& v : d.base.copies[0].classes[1])
            ++v;
        auto r = verify_embedded(d);
        REQUIRE_FALSE(r.ok());
        CHECK(r.violation->kind == "class_not_a_cell");
    }
    SUBCASE("copy count")
    {
        d.base.copies.pop_back();
        auto r = verify_embedded(d);
        REQUIRE_FALSE(r.ok());
        CHECK(r.violation->kind == "copy_count");
    }
    SUBCASE("cells out of place")
    {
        std::swap(d.cells[1][0], d.cells[1][1]);
        auto r = verify_embedded(d);
        REQUIRE_FALSE(r.ok());
        CHECK(r.violation->kind == "cell_layout");
    }
    SUBCASE("duplicated copy replacing another")
    {
        d.base.copies[1] = d.base.copies[0];
        auto r = verify_embedded(d);
        REQUIRE_FALSE(r.ok());
        CHECK(r.violation->kind == "edge_reused");
    }
}

TEST_CASE("star parameters")
{
    auto path = star_parameters(Pattern({1, 2}));
    CHECK(path.p == 2);
    CHECK(path.amplified == Pattern({2, 4}));

    auto edge = star_parameters(Pattern({1, 1}));
    CHECK(edge.p == 2);
    CHECK(edge.amplified == Pattern({2, 2}));

    auto wide = star_parameters(Pattern({2, 3, 6}));
    CHECK(wide.p == 36);
    CHECK(wide.amplified == Pattern({72, 108, 216}));

    CHECK(kind_of([] { star_parameters(Pattern({2, 3, 6}), 30); }) == ErrorKind::SearchExhausted);
}

TEST_CASE("star parameters make both constructions available")
{
    for (const auto& parts : std::vector<std::vector<std::size_t>>{
             {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 1, 1}, {1, 2, 2}, {2, 2, 2}, {1, 1, 1, 1}, {1, 1, 1, 2}}) {
        Pattern pattern(parts);
        CAPTURE(pattern.to_string());
        auto star = star_parameters(pattern);
        CHECK(star.p > 1);
        CHECK(star.p % pattern.product() == 0);
        CHECK_NOTHROW(make_context(star.amplified));
        CHECK_NOTHROW(embedded_decompose(pattern, star.p));
    }
}
