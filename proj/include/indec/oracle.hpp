#pragma once

#include "indec/decomposition.hpp"
#include "indec/graph.hpp"
#include "indec/pattern.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indec {

/// Limits for the exact-cover search. A search that hits either limit ends
/// with SearchStatus::BudgetExceeded ("unknown"), never with a false "no".
struct SearchBudget {
    std::uint64_t max_nodes = 200'000'000;
    double max_seconds = 600.0;

    /// Default budget with max_nodes taken from INDUCED_DECOMP_BUDGET_NODES
    /// when that variable holds a positive integer.
    static SearchBudget from_env();
};

inline constexpr std::size_t default_enumeration_cap = 40;
inline constexpr std::size_t default_cex_cap = 8;

/// Every placement of the pattern in g: k-tuples of disjoint sorted vertex
/// sets, class i of size a_i, all cross pairs adjacent, and (when induced)
/// every class independent. Tuples that differ only by swapping classes of
/// equal size are reported once, with those classes in increasing
/// lexicographic order. Output is in lexicographic class-tuple order.
/// Throws CapExceeded when g has more than cap vertices.
std::vector<FCopy> enumerate_copies(const SmallGraph& g, const Pattern& pattern, bool induced,
                                    std::size_t cap = default_enumeration_cap);

enum class SearchStatus { Found, NoDecomposition, BudgetExceeded };

enum class Branching {
    /// Branch on the lexicographically smallest uncovered edge.
    SmallestEdge,
    /// Branch on the uncovered edge with the fewest usable candidates.
    FewestCandidates,
};

struct SearchResult {
    SearchStatus status = SearchStatus::NoDecomposition;
    std::optional<Decomposition> decomposition;
    std::uint64_t nodes = 0;
};

/// Backtracking exact cover of E(g) by pattern copies. The first solution in
/// the deterministic branching order is returned; NoDecomposition is only
/// reported after the search space is exhausted.
SearchResult exact_cover_decompose(const SmallGraph& g, const Pattern& pattern, bool induced,
                                   const SearchBudget& budget = {},
                                   Branching branching = Branching::SmallestEdge,
                                   std::size_t cap = default_enumeration_cap);

struct Violation {
    std::string kind;
    std::string message;
    /// Offending vertices, 0-based (an edge, a vertex, or a class pair).
    std::vector<Vertex> witness;
    std::optional<std::size_t> copy;
};

struct VerifyReport {
    std::optional<Violation> violation;
    bool ok() const { return !violation.has_value(); }
};

/// Checks that copies form an F-decomposition of g: each copy's class sizes
/// match the pattern as a multiset with all cross pairs edges, classes are
/// independent when induced is set, copies are pairwise edge-disjoint and
/// cover E(g). The first violation is reported with a witness; copies are
/// scanned in order, then edges lexicographically. OpenMP-parallel, with
/// reports identical to reference::verify_decomposition.
VerifyReport verify_decomposition(const SmallGraph& g, const Pattern& pattern,
                                  const std::vector<FCopy>& copies, bool induced);

struct CexResult {
    std::size_t n = 0;
    /// C(n,2) minus the largest edge count admitting an induced decomposition.
    std::size_t value = 0;
    /// Lexicographically least maximiser, ordering labelled graphs by their
    /// sorted non-edge lists.
    SmallGraph witness;
    Decomposition decomposition;
};

/// Exact cex(n, F) by exhaustion over labelled graphs in decreasing edge
/// count, with isomorphism classes deduplicated through canonical forms.
/// Throws CapExceeded for n > cap and BudgetExceeded if any single search is
/// cut off before the answer is settled. Candidate graphs are distributed
/// across OpenMP threads; the result equals reference::cex_exact.
CexResult cex_exact(std::size_t n, const Pattern& pattern, const SearchBudget& budget = {},
                    std::size_t cap = default_cex_cap);

/// True iff every vertex of g has a non-neighbour.
bool non_neighbor_check(const SmallGraph& g);
/// True iff every vertex of K_{a_1,...,a_k} has a non-neighbour, i.e. all a_i >= 2.
bool non_neighbor_check(const Pattern& pattern);
/// True iff every vertex of positive degree has a non-neighbour.
bool non_isolated_have_non_neighbor(const SmallGraph& g);

/// Canonical labelling of a graph on at most 11 vertices: the minimum edge
/// mask over all relabellings that respect a refined degree partition.
/// Bit i of a mask is the i-th vertex pair in lexicographic order.
std::uint64_t canonical_mask(const SmallGraph& g);
std::uint64_t edge_mask(const SmallGraph& g);
SmallGraph graph_from_mask(std::size_t n, std::uint64_t mask);

namespace reference {

/// Straight serial scan; the ground truth for the parallel verifier.
VerifyReport verify_decomposition(const SmallGraph& g, const Pattern& pattern,
                                  const std::vector<FCopy>& copies, bool induced);

/// Serial cex_exact over the same candidate order.
CexResult cex_exact(std::size_t n, const Pattern& pattern, const SearchBudget& budget = {},
                    std::size_t cap = default_cex_cap);

} // namespace reference

} // namespace indec
