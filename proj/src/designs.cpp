#include "indec/designs.hpp"

#include "indec/error.hpp"
#include "indec/galois.hpp"

#include <algorithm>
#include <string>

namespace indec {

LatinSquare::LatinSquare(std::size_t order, std::vector<std::uint32_t> grid)
    : order_(order), grid_(std::move(grid))
{
    if (!is_latin(order_, grid_))
        throw Error(ErrorKind::InvalidArgument, "grid is not a Latin square of order " + std::to_string(order_));
}

bool LatinSquare::is_latin(std::size_t order, const std::vector<std::uint32_t>& grid)
{
    if (order == 0 || grid.size() != order * order)
        return false;
    std::vector<char> seen(order + 1);
    for (std::size_t r = 0; r < order; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t c = 0; c < order; ++c) {
            auto s = grid[r * order + c];
            if (s < 1 || s > order || seen[s])
                return false;
            seen[s] = 1;
        }
    }
    for (std::size_t c = 0; c < order; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < order; ++r) {
            auto s = grid[r * order + c];
            if (seen[s])
                return false;
            seen[s] = 1;
        }
    }
    return true;
}

bool orthogonal(const LatinSquare& a, const LatinSquare& b)
{
    if (a.order() != b.order())
        return false;
    const std::size_t n = a.order();
    std::vector<char> seen(n * n, 0);
    for (std::size_t i = 0; i < n * n; ++i) {
        auto key = (a.cells()[i] - 1) * n + (b.cells()[i] - 1);
        if (seen[key])
            return false;
        seen[key] = 1;
    }
    return true;
}

bool is_mols(const MolsFamily& family)
{
    for (const auto& s : family.squares)
        if (s.order() != family.order)
            return false;
    for (std::size_t i = 0; i < family.squares.size(); ++i)
        for (std::size_t j = i + 1; j < family.squares.size(); ++j)
            if (!orthogonal(family.squares[i], family.squares[j]))
                return false;
    return true;
}

LatinSquare cyclic_latin(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "Latin square order must be positive");
    std::vector<std::uint32_t> grid(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            grid[x * n + y] = static_cast<std::uint32_t>((x + y) % n + 1);
    return LatinSquare(n, std::move(grid));
}

MolsFamily mols_prime_power(std::uint64_t q, std::size_t count)
{
    GaloisField field(q); // throws NotPrimePower
    if (count > q - 1)
        throw Error(ErrorKind::CountExceedsBound,
                    "at most " + std::to_string(q - 1) + " MOLS of order " + std::to_string(q) +
                        " from GF(" + std::to_string(q) + ")");
    MolsFamily family{static_cast<std::size_t>(q), {}};
    family.squares.reserve(count);
    const auto n = static_cast<std::size_t>(q);
    for (std::size_t lambda = 1; lambda <= count; ++lambda) {
        const auto l = static_cast<GaloisField::Element>(lambda);
        std::vector<std::uint32_t> grid(n * n);
        for (std::size_t x = 0; x < n; ++x) {
            const auto lx = field.mul(l, static_cast<GaloisField::Element>(x));
            for (std::size_t y = 0; y < n; ++y)
                grid[x * n + y] = field.add(lx, static_cast<GaloisField::Element>(y)) + 1;
        }
        family.squares.emplace_back(n, std::move(grid));
    }
    return family;
}

MolsFamily mols_product(const MolsFamily& a, const MolsFamily& b, std::size_t count)
{
    if (count > std::min(a.size(), b.size()))
        throw Error(ErrorKind::CountExceedsBound,
                    "product of families with " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()) + " squares cannot yield " + std::to_string(count));
    const std::size_t na = a.order, nb = b.order, n = na * nb;
    MolsFamily family{n, {}};
    family.squares.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const auto& sa = a.squares[s];
        const auto& sb = b.squares[s];
        std::vector<std::uint32_t> grid(n * n);
        for (std::size_t xa = 1; xa <= na; ++xa)
            for (std::size_t xb = 1; xb <= nb; ++xb)
                for (std::size_t ya = 1; ya <= na; ++ya)
                    for (std::size_t yb = 1; yb <= nb; ++yb) {
                        const std::size_t row = (xa - 1) * nb + (xb - 1);
                        const std::size_t col = (ya - 1) * nb + (yb - 1);
                        grid[row * n + col] = static_cast<std::uint32_t>(
                            (sa.at(xa, ya) - 1) * nb + sb.at(xb, yb));
                    }
        family.squares.emplace_back(n, std::move(grid));
    }
    return family;
}

std::size_t macneish(std::uint64_t n)
{
    if (n == 0)
        return 0;
    std::size_t bound = unbounded;
    for (const auto& pp : factorize(n))
        bound = std::min<std::size_t>(bound, pp.value() - 1);
    return bound;
}

MolsFamily mols(std::uint64_t n, std::size_t count)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "order must be positive");
    const auto bound = macneish(n);
    if (count > bound)
        throw Error(ErrorKind::UnsupportedOrder,
                    "cannot construct " + std::to_string(count) + " MOLS of order " + std::to_string(n) +
                        ": MacNeish bound is " + std::to_string(bound));
    if (count == 0)
        return MolsFamily{static_cast<std::size_t>(n), {}};
    if (n == 1)
        return MolsFamily{1, std::vector<LatinSquare>(count, cyclic_latin(1))};

    MolsFamily result;
    bool first = true;
    for (const auto& pp : factorize(n)) {
        auto factor = mols_prime_power(pp.value(), count);
        result = first ? std::move(factor) : mols_product(result, factor, count);
        first = false;
    }
    return result;
}

bool td_constructible(std::size_t k, std::uint64_t n)
{
    if (k < 2 || n == 0)
        return false;
    return k - 2 <= macneish(n);
}

std::string point_id(const Point& p)
{
    return "g" + std::to_string(p.group) + ":" + std::to_string(p.index);
}

TransversalDesign::TransversalDesign(std::size_t k, std::size_t n, std::vector<Block> blocks)
    : k_(k), n_(n), blocks_(std::move(blocks)), pair_index_(k * n * k * n, 0)
{
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const auto& block = blocks_[b];
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = 0; j < block.size(); ++j) {
                if (i == j)
                    continue;
                auto s = slot(block[i], block[j]);
                if (s != npos && pair_index_[s] == 0)
                    pair_index_[s] = static_cast<std::uint32_t>(b + 1);
            }
    }
}

std::size_t TransversalDesign::slot(const Point& a, const Point& b) const
{
    if (a.group < 1 || a.group > k_ || b.group < 1 || b.group > k_ || a.index < 1 || a.index > n_ ||
        b.index < 1 || b.index > n_)
        return npos;
    const std::size_t ia = (a.group - 1) * n_ + (a.index - 1);
    const std::size_t ib = (b.group - 1) * n_ + (b.index - 1);
    return ia * k_ * n_ + ib;
}

std::size_t TransversalDesign::find_block(const Point& a, const Point& b) const
{
    auto s = slot(a, b);
    if (s == npos || pair_index_[s] == 0)
        return npos;
    return pair_index_[s] - 1;
}

TransversalDesign td_from_mols(const MolsFamily& family, std::size_t k)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidArgument, "transversal design needs blocksize k >= 2");
    if (family.order == 0)
        throw Error(ErrorKind::InvalidArgument, "transversal design needs groupsize n >= 1");
    if (family.size() < k - 2)
        throw Error(ErrorKind::InsufficientSquares,
                    "TD(" + std::to_string(k) + "," + std::to_string(family.order) + ") needs " +
                        std::to_string(k - 2) + " MOLS, family has " + std::to_string(family.size()));
    const std::size_t n = family.order;
    std::vector<Block> blocks;
    blocks.reserve(n * n);
    for (std::uint32_t x = 1; x <= n; ++x)
        for (std::uint32_t y = 1; y <= n; ++y) {
            Block block;
            block.reserve(k);
            block.push_back({1, x});
            block.push_back({2, y});
            for (std::size_t s = 0; s + 2 < k; ++s)
                block.push_back({static_cast<std::uint32_t>(s + 3), family.squares[s].at(x, y)});
            blocks.push_back(std::move(block));
        }
    return TransversalDesign(k, n, std::move(blocks));
}

TransversalDesign make_td(std::size_t k, std::uint64_t n)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidArgument, "transversal design needs blocksize k >= 2");
    return td_from_mols(mols(n, k - 2), k);
}

TdReport verify_td(const TransversalDesign& td)
{
    TdReport report;
    const std::size_t k = td.blocksize(), n = td.groupsize();
    auto in_range = [&](const Point& p) {
        return p.group >= 1 && p.group <= k && p.index >= 1 && p.index <= n;
    };
    auto add = [&](TdViolation::Kind kind, Point a, Point b, std::size_t block, std::string msg) {
        report.violations.push_back({kind, a, b, block, std::move(msg)});
    };

    // cover[(a, b)] counts blocks holding the cross-group pair a < b.
    const std::size_t points = k * n;
    std::vector<std::uint32_t> cover(points * points, 0);
    auto flat = [&](const Point& p) { return (p.group - 1) * n + (p.index - 1); };

    for (std::size_t b = 0; b < td.blocks().size(); ++b) {
        const auto& block = td.blocks()[b];
        if (block.size() != k)
            add(TdViolation::Kind::BadBlockSize, {}, {}, b,
                "block " + std::to_string(b) + " has " + std::to_string(block.size()) + " points");
        bool usable = true;
        for (const auto& p : block)
            if (!in_range(p)) {
                add(TdViolation::Kind::PointOutOfRange, p, {}, b, "point " + point_id(p) + " out of range");
                usable = false;
            }
        if (!usable)
            continue;
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                auto lo = std::min(block[i], block[j]);
                auto hi = std::max(block[i], block[j]);
                if (lo.group == hi.group) {
                    add(TdViolation::Kind::NotTransversal, lo, hi, b,
                        "block " + std::to_string(b) + " meets group " + std::to_string(lo.group) + " twice");
                    continue;
                }
                ++cover[flat(lo) * points + flat(hi)];
            }
    }

    for (std::uint32_t g1 = 1; g1 <= k; ++g1)
        for (std::uint32_t i1 = 1; i1 <= n; ++i1)
            for (std::uint32_t g2 = g1 + 1; g2 <= k; ++g2)
                for (std::uint32_t i2 = 1; i2 <= n; ++i2) {
                    Point a{g1, i1}, b{g2, i2};
                    auto c = cover[flat(a) * points + flat(b)];
                    if (c == 0)
                        add(TdViolation::Kind::PairUncovered, a, b, 0,
                            "pair " + point_id(a) + "," + point_id(b) + " lies in no block");
                    else if (c > 1)
                        add(TdViolation::Kind::PairRepeated, a, b, 0,
                            "pair " + point_id(a) + "," + point_id(b) + " lies in " + std::to_string(c) +
                                " blocks");
                }

    if (td.blocks().size() != n * n)
        add(TdViolation::Kind::BlockCount, {}, {}, 0,
            std::to_string(td.blocks().size()) + " blocks, expected " + std::to_string(n * n));
    return report;
}

const Block& block_through(const TransversalDesign& td, std::uint32_t p, std::uint32_t q,
                           std::uint32_t p2, std::uint32_t q2)
{
    if (q == q2)
        throw Error(ErrorKind::SameGroup, "points share group " + std::to_string(q));
    Point a{q, p}, b{q2, p2};
    auto idx = td.find_block(a, b);
    if (idx == TransversalDesign::npos)
        throw Error(ErrorKind::InvalidArgument, "no block through " + point_id(a) + " and " + point_id(b));
    return td.blocks()[idx];
}

} // namespace indec
