#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace indec {

/// n x n grid over the symbols 1..n. Rows and columns are addressed 1-based
/// through at(); storage is row-major.
class LatinSquare {
public:
    LatinSquare() = default;
    /// Throws InvalidArgument unless grid is a Latin square of order n.
    LatinSquare(std::size_t order, std::vector<std::uint32_t> grid);

    std::size_t order() const { return order_; }
    std::uint32_t at(std::size_t row, std::size_t col) const
    {
        return grid_[(row - 1) * order_ + (col - 1)];
    }
    const std::vector<std::uint32_t>& cells() const { return grid_; }

    static bool is_latin(std::size_t order, const std::vector<std::uint32_t>& grid);

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    std::size_t order_ = 0;
    std::vector<std::uint32_t> grid_;
};

/// Ordered family of pairwise orthogonal Latin squares of a common order.
struct MolsFamily {
    std::size_t order = 0;
    std::vector<LatinSquare> squares;

    std::size_t size() const { return squares.size(); }
};

bool orthogonal(const LatinSquare& a, const LatinSquare& b);
bool is_mols(const MolsFamily& family);

/// grid[x][y] = ((x + y - 2) mod n) + 1.
LatinSquare cyclic_latin(std::size_t n);

/// count squares L(x, y) = lambda * x + y over GF(q).
MolsFamily mols_prime_power(std::uint64_t q, std::size_t count);

/// MacNeish product of the first count squares of a and b.
MolsFamily mols_product(const MolsFamily& a, const MolsFamily& b, std::size_t count);

inline constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

/// min over prime-power factors q of n of (q - 1); unbounded for n = 1.
std::size_t macneish(std::uint64_t n);

/// count MOLS of order n built from prime-power fields and MacNeish products.
/// Throws UnsupportedOrder when count > macneish(n).
MolsFamily mols(std::uint64_t n, std::size_t count);

/// TD(k, n) is constructible here iff k - 2 <= macneish(n).
bool td_constructible(std::size_t k, std::uint64_t n);

/// A point of a transversal design: the index-th element (1-based) of the
/// group-th group (1-based).
struct Point {
    std::uint32_t group = 0;
    std::uint32_t index = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

std::string point_id(const Point& p);

using Block = std::vector<Point>;

/// TD(k, n) with index 1: groups are fixed as {(q, 1..n)} for q = 1..k.
/// Construction builds a pair -> block lookup used by block_through(); the
/// design itself is not validated (see verify_td).
class TransversalDesign {
public:
    TransversalDesign() = default;
    TransversalDesign(std::size_t k, std::size_t n, std::vector<Block> blocks);

    std::size_t blocksize() const { return k_; }
    std::size_t groupsize() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// Block index holding both points, or npos when no block does.
    std::size_t find_block(const Point& a, const Point& b) const;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

private:
    std::size_t slot(const Point& a, const Point& b) const;

    std::size_t k_ = 0;
    std::size_t n_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::uint32_t> pair_index_; // block + 1, 0 when uncovered
};

/// Blocks (x, y) in lexicographic order: {(1,x), (2,y), (3, L1[x][y]), ...}.
/// Throws InsufficientSquares when the family has fewer than k - 2 squares.
TransversalDesign td_from_mols(const MolsFamily& family, std::size_t k);

/// td_from_mols(mols(n, k - 2), k).
TransversalDesign make_td(std::size_t k, std::uint64_t n);

struct TdViolation {
    enum class Kind {
        BadBlockSize,
        PointOutOfRange,
        NotTransversal,
        PairUncovered,
        PairRepeated,
        BlockCount,
    };
    Kind kind;
    Point first{};
    Point second{};
    std::size_t block = 0;
    std::string message;
};

struct TdReport {
    std::vector<TdViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the TD axioms; every violated pair is listed.
TdReport verify_td(const TransversalDesign& td);

/// The unique block containing (group q, index p) and (group q2, index p2).
/// Throws SameGroup when q == q2 and InvalidArgument on out-of-range points
/// or when no block covers the pair.
const Block& block_through(const TransversalDesign& td, std::uint32_t p, std::uint32_t q,
                           std::uint32_t p2, std::uint32_t q2);

} // namespace indec
