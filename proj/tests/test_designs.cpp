#include "brute.hpp"

#include "indec/designs.hpp"
#include "indec/error.hpp"
#include "indec/serialize.hpp"

#include "doctest.h"
#include "expect.hpp"

#include <random>

using namespace indec;

namespace {

bool all_orthogonal(const MolsFamily& family)
{
    for (const auto& s : family.squares)
        if (!brute::is_latin(s))
            return false;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!brute::orthogonal(family.squares[i], family.squares[j]))
                return false;
    return true;
}

} // namespace

TEST_CASE("cyclic Latin squares")
{
    CHECK(cyclic_latin(1).cells() == std::vector<std::uint32_t>{1});
    CHECK(cyclic_latin(3).cells() == std::vector<std::uint32_t>{1, 2, 3, 2, 3, 1, 3, 1, 2});
    for (std::size_t n = 1; n <= 50; ++n)
        CHECK(brute::is_latin(cyclic_latin(n)));
    CHECK(kind_of([] { cyclic_latin(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("LatinSquare rejects non-Latin grids")
{
    CHECK_THROWS_AS(LatinSquare(2, {1, 2, 1, 2}), Error);
    CHECK_THROWS_AS(LatinSquare(2, {1, 2, 2}), Error);
    CHECK_THROWS_AS(LatinSquare(2, {0, 1, 1, 0}), Error);
}

TEST_CASE("prime power MOLS")
{
    auto three = mols_prime_power(3, 2);
    CHECK(three.size() == 2);
    CHECK(all_orthogonal(three));
    auto four = mols_prime_power(4, 3);
    CHECK(four.size() == 3);
    CHECK(all_orthogonal(four));
    CHECK(kind_of([] { mols_prime_power(6, 1); }) == ErrorKind::NotPrimePower);
    CHECK(kind_of([] { mols_prime_power(5, 5); }) == ErrorKind::CountExceedsBound);
    for (std::uint64_t q : {2, 5, 7, 8, 9, 11, 13, 16})
        CHECK(all_orthogonal(mols_prime_power(q, q - 1)));
}

TEST_CASE("MacNeish products")
{
    auto a = mols_prime_power(3, 2);
    auto b = mols_prime_power(7, 2);
    auto product = mols_product(a, b, 2);
    CHECK(product.order == 21);
    CHECK(product.size() == 2);
    CHECK(all_orthogonal(product));

    auto empty = mols_product(a, b, 0);
    CHECK(empty.size() == 0);
    CHECK(empty.order == 21);

    auto c = mols_prime_power(4, 3);
    CHECK(kind_of([&] { mols_product(a, c, 3); }) == ErrorKind::CountExceedsBound);
}

TEST_CASE("MOLS dispatcher")
{
    CHECK(macneish(1) == unbounded);
    CHECK(macneish(6) == 1);
    CHECK(macneish(12) == 2);
    CHECK(macneish(36) == 3);
    CHECK(macneish(63) == 6);

    auto five = mols(5, 4);
    CHECK(five.size() == 4);
    CHECK(all_orthogonal(five));
    CHECK(kind_of([] { mols(6, 2); }) == ErrorKind::UnsupportedOrder);
    for (std::uint64_t n = 1; n <= 12; ++n) {
        auto none = mols(n, 0);
        CHECK(none.size() == 0);
        CHECK(none.order == n);
    }
    CHECK(all_orthogonal(mols(12, 2)));
    CHECK(all_orthogonal(mols(20, 3)));
    CHECK(all_orthogonal(mols(6, 1)));
    CHECK(mols(1, 3).size() == 3);

    // Identical inputs serialise identically.
    CHECK(dump(to_json(mols(12, 2))) == dump(to_json(mols(12, 2))));
}

TEST_CASE("transversal designs from MOLS")
{
    auto td2 = td_from_mols(mols(3, 0), 2);
    CHECK(td2.blocks().size() == 9);
    CHECK(verify_td(td2).ok());

    MolsFamily one{3, {cyclic_latin(3)}};
    auto td3 = td_from_mols(one, 3);
    CHECK(td3.blocks().size() == 9);
    CHECK(verify_td(td3).ok());

    auto td4 = td_from_mols(mols(3, 2), 4);
    CHECK(verify_td(td4).ok());

    CHECK(kind_of([&] { td_from_mols(one, 4); }) == ErrorKind::InsufficientSquares);
    CHECK(verify_td(make_td(2, 1)).ok());
    CHECK(make_td(2, 1).blocks().size() == 1);
}

TEST_CASE("verify_td reports every uncovered pair")
{
    MolsFamily one{3, {cyclic_latin(3)}};
    auto td = td_from_mols(one, 3);
    auto blocks = td.blocks();
    blocks.erase(blocks.begin() + 4);
    auto report = verify_td(TransversalDesign(3, 3, blocks));
    CHECK_FALSE(report.ok());
    std::size_t uncovered = 0;
    for (const auto& v : report.violations)
        uncovered += v.kind == TdViolation::Kind::PairUncovered;
    CHECK(uncovered == 3);

    // A block meeting one group twice.
    auto bad = td.blocks();
    bad[0][1] = Point{1, 2};
    auto bad_report = verify_td(TransversalDesign(3, 3, bad));
    CHECK_FALSE(bad_report.ok());
    CHECK(std::any_of(bad_report.violations.begin(), bad_report.violations.end(),
                      [](const TdViolation& v) { return v.kind == TdViolation::Kind::NotTransversal; }));
}

TEST_CASE("block_through")
{
    auto td2 = make_td(2, 3);
    const auto& b = block_through(td2, 2, 1, 3, 2);
    CHECK(b == Block{{1, 2}, {2, 3}});

    MolsFamily one{3, {cyclic_latin(3)}};
    auto td3 = td_from_mols(one, 3);
    const auto& b3 = block_through(td3, 1, 1, 1, 2);
    CHECK(std::find(b3.begin(), b3.end(), Point{3, one.squares[0].at(1, 1)}) != b3.end());
    CHECK(kind_of([&] { block_through(td3, 1, 2, 2, 2); }) == ErrorKind::SameGroup);
}

TEST_CASE("round trip over prime powers: td_from_mols(mols(q, k-2), k)")
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11})
        for (std::size_t k = 2; k <= q + 1; ++k) {
            CAPTURE(q);
            CAPTURE(k);
            auto td = make_td(k, q);
            REQUIRE(verify_td(td).ok());
            CHECK(td.blocks().size() == q * q);
            // every point lies in exactly q blocks
            std::vector<std::size_t> count(k * q, 0);
            for (const auto& block : td.blocks())
                for (const auto& p : block)
                    ++count[(p.group - 1) * q + (p.index - 1)];
            CHECK(std::all_of(count.begin(), count.end(), [&](std::size_t c) { return c == q; }));
        }
}

TEST_CASE("every pair of distinct-group points resolves to a block containing both")
{
    std::mt19937 rng(7);
    for (std::uint64_t n : {4, 6, 10, 12}) {
        const std::size_t k = std::min<std::size_t>(macneish(n) + 2, 5);
        auto td = make_td(k, n);
        std::uniform_int_distribution<std::uint32_t> idx(1, static_cast<std::uint32_t>(n));
        std::uniform_int_distribution<std::uint32_t> grp(1, static_cast<std::uint32_t>(k));
        for (int trial = 0; trial < 200; ++trial) {
            auto q = grp(rng), q2 = grp(rng);
            if (q == q2)
                continue;
            auto p = idx(rng), p2 = idx(rng);
            const auto& b = block_through(td, p, q, p2, q2);
            CHECK(std::find(b.begin(), b.end(), Point{q, p}) != b.end());
            CHECK(std::find(b.begin(), b.end(), Point{q2, p2}) != b.end());
        }
    }
}
