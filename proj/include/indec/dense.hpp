#pragma once

#include "indec/decomposition.hpp"
#include "indec/embedded.hpp"
#include "indec/graph.hpp"
#include "indec/oracle.hpp"
#include "indec/pattern.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace indec {

/// n = n' p + t with n' = s q + r, 0 <= r < q and 0 <= t <= pq - 1.
struct DenseParameters {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    std::uint64_t n_prime = 0;
};

struct DivisibilityResult {
    bool ok = true;
    std::vector<std::string> reasons;
};

/// Necessary conditions for K_{n'} to split into copies of the pattern:
/// |E(F)| divides C(n', 2), and the gcd of the pattern's vertex degrees
/// divides n' - 1.
DivisibilityResult divisibility_check(const Pattern& pattern, std::uint64_t n_prime);

/// Smallest period of the admissible residues of divisibility_check.
std::uint64_t divisibility_period(const Pattern& pattern);

/// p from star_parameters; n' is the largest admissible value with
/// n' <= n / p, n' >= |V(F)| and t < pq whose clique decomposition the
/// oracle certifies. Throws NoFeasibleParameters otherwise.
DenseParameters choose_parameters(const Pattern& pattern, std::uint64_t n,
                                  const SearchBudget& budget = SearchBudget::from_env());

/// Edge-disjoint (non-induced) copies covering K_{n'}, found by exact cover
/// and memoised per (pattern, n'). Throws NoDecomposition or BudgetExceeded.
Decomposition step1_decompose_clique(const Pattern& pattern, std::uint64_t n_prime,
                                     const SearchBudget& budget = SearchBudget::from_env());

/// A copy of F_p = K_{p a_1, ..., p a_k} in the blown-up graph.
struct Placement {
    /// Index of the source copy in the clique decomposition.
    std::size_t source = 0;
    /// K_{n'} vertices forming each class of the source copy, ascending.
    std::vector<std::vector<Vertex>> sets;
    /// Union of the corresponding p-sets, ascending.
    std::vector<std::vector<Vertex>> classes;
};

struct BlownUp {
    std::uint64_t p = 0;
    /// n' parts of size p: K_{n'p} minus n' disjoint K_p.
    HostDescriptor graph;
    std::vector<Placement> placements;
};

/// Vertex x of K_{n'} becomes the p-set {x p, ..., x p + p - 1}.
BlownUp step2_blow_up(const Decomposition& clique, std::uint64_t p);

/// cells[i][j]: the j-th a_i-subset of class i, numbered p-set by p-set.
using ClassCells = std::vector<std::vector<std::vector<Vertex>>>;

/// Throws DivisibilityViolation when some a_i does not divide p.
ClassCells step3_refine(const Placement& placement, const Pattern& pattern, std::uint64_t p);

/// The embedded decomposition transported onto one placement: abstract cell
/// V_{i,j} becomes cells[i][j]. Yields p^2 copies, induced in the blown-up graph.
std::vector<FCopy> step4_apply_embedded(const Placement& placement, const ClassCells& cells,
                                        const EmbeddedDecomposition& embedded);

inline constexpr std::uint64_t default_non_edge_cap = 1'000'000;

struct DenseCertificate {
    DenseParameters params;
    Pattern pattern;
    /// Non-edges of G in lexicographic order; empty when non_edges_listed
    /// is false because the count exceeded the listing cap.
    std::vector<Edge> non_edges;
    bool non_edges_listed = true;
    std::uint64_t non_edge_count = 0;
    /// Host: n' parts of size p then t singleton parts, with every pair at
    /// an isolated vertex listed as an extra non-edge.
    Decomposition decomposition;
    /// non_edge_count < (pq + p/2) n, kept as 2 * lhs < rhs2 = (2pq + p) n.
    std::uint64_t bound_lhs = 0;
    std::uint64_t bound_rhs_twice = 0;
};

/// Runs the whole construction and checks every certificate invariant,
/// including a full induced-decomposition verification of G.
DenseCertificate assemble(const Pattern& pattern, std::uint64_t n,
                          const SearchBudget& budget = SearchBudget::from_env(),
                          std::uint64_t non_edge_cap = default_non_edge_cap);

/// ((n - t) / p) C(p, 2) + C(t, 2) + t (n - t)
std::uint64_t expected_non_edges(const DenseParameters& params);

} // namespace indec
