#include "indec/blowup.hpp"
#include "indec/dense.hpp"
#include "indec/embedded.hpp"
#include "indec/error.hpp"
#include "indec/serialize.hpp"

#include "doctest.h"

#include <sstream>

using namespace indec;
using nlohmann::json;

TEST_CASE("Latin squares and MOLS")
{
    auto j = to_json(cyclic_latin(3));
    CHECK(j["order"] == 3);
    CHECK(j["grid"] == json::parse("[[1,2,3],[2,3,1],[3,1,2]]"));

    auto family = to_json(mols(4, 3));
    CHECK(family["count"] == 3);
    CHECK(family["squares"].size() == 3);
}

TEST_CASE("transversal designs")
{
    auto j = to_json(make_td(2, 1));
    CHECK(j["k"] == 2);
    CHECK(j["n"] == 1);
    CHECK(j["groups"] == json::parse(R"([["g1:1"],["g2:1"]])"));
    CHECK(j["blocks"] == json::parse(R"([["g1:1","g2:1"]])"));
    CHECK(to_json(make_td(3, 3))["blocks"].size() == 9);
}

TEST_CASE("decomposition shape and round trip")
{
    auto d = blowup_decompose(Pattern({1, 2}));
    auto j = to_json(d);
    CHECK(j["host"]["parts"] == json::parse("[2,4]"));
    CHECK_FALSE(j["host"].contains("non_edges"));
    CHECK(j["pattern"] == json::parse("[1,2]"));
    CHECK(j["induced"] == true);
    CHECK(j["copies"][0]["codeword"]["b"] == json::parse("[1,1]"));
    CHECK(j["copies"][0]["classes"] == json::parse("[[1],[3,4]]"));

    auto back = decomposition_from_json(json::parse(dump(j)));
    CHECK(back.pattern == d.pattern);
    CHECK(back.host.parts == d.host.parts);
    CHECK(back.induced);
    REQUIRE(back.copies.size() == d.copies.size());
    for (std::size_t i = 0; i < d.copies.size(); ++i) {
        CHECK(back.copies[i].classes == d.copies[i].classes);
        CHECK(back.copies[i].codeword == d.copies[i].codeword);
    }
    CHECK(dump(to_json(back)) == dump(j));
}

TEST_CASE("embedded and dense artifacts")
{
    auto e = to_json(embedded_decompose(Pattern({1, 2}), 2));
    CHECK(e["p"] == 2);
    CHECK(e["cells"] == json::parse("[[[1],[2]],[[3,4],[5,6]]]"));

    auto cert = assemble(Pattern({1, 2}), 9);
    auto j = to_json(cert);
    CHECK(j["n"] == 9);
    CHECK(j["params"]["n_prime"] == 4);
    CHECK(j["params"]["q"] == 4);
    CHECK(j["non_edges"].size() == 12);
    CHECK(j["copies"].size() == 12);
    CHECK(j["bound"]["lhs"] == 12);
    CHECK(j["bound"]["rhs"] == 81);
    // The isolated vertex 9 misses everyone.
    CHECK(j["non_edges"].back() == json::parse("[8,9]"));

    auto back = decomposition_from_json(j);
    CHECK(back.copies.size() == 12);
}

TEST_CASE("dump is sorted and newline terminated")
{
    json j = {{"zeta", 1}, {"alpha", 2}};
    auto text = dump(j);
    CHECK(text.back() == '\n');
    CHECK(text.find("alpha") < text.find("zeta"));
}

TEST_CASE("malformed decomposition JSON")
{
    auto kind = [](const json& j) {
        try {
            decomposition_from_json(j);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalInvariant;
    };
    CHECK(kind(json::parse("[]")) == ErrorKind::InvalidArgument);
    CHECK(kind(json::parse(R"({"pattern":[1,2]})")) == ErrorKind::InvalidArgument);
    CHECK(kind(json::parse(R"({"pattern":[1,2],"copies":[{"classes":[[0],[1,2]]}]})")) ==
          ErrorKind::InvalidArgument);
    CHECK(kind(json::parse(R"({"pattern":"x","copies":[]})")) == ErrorKind::InvalidArgument);
    CHECK(kind(json::parse(R"({"pattern":[1,2],"copies":[{"classes":[["a"],[1,2]]}]})")) ==
          ErrorKind::InvalidArgument);
    CHECK(kind(json::parse(R"({"pattern":[1],"copies":[]})")) == ErrorKind::InvalidArgument);
}

TEST_CASE("edge lists")
{
    SmallGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    auto text = to_edge_list(g);
    CHECK(text == "# vertices 5\n1 2\n2 4\n");
    std::istringstream in(text);
    CHECK(parse_edge_list(in) == g);

    std::istringstream bare("1 2\n# comment\n\n2 3\n");
    auto h = parse_edge_list(bare);
    CHECK(h.order() == 3);
    CHECK(h.edge_count() == 2);

    std::istringstream bad("1 x\n");
    CHECK_THROWS_AS(parse_edge_list(bad), Error);
    std::istringstream loop("2 2\n");
    CHECK_THROWS_AS(parse_edge_list(loop), Error);
    std::istringstream over("# vertices 2\n1 3\n");
    CHECK_THROWS_AS(parse_edge_list(over), Error);
}
