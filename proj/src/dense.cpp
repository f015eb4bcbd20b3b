#include "indec/dense.hpp"

#include "indec/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace indec {

namespace {

std::uint64_t degree_gcd(const Pattern& pattern)
{
    const auto s = pattern.vertex_count();
    std::uint64_t g = 0;
    for (auto a : pattern.parts())
        g = std::gcd(g, s - a);
    return g;
}

bool admissible(const Pattern& pattern, std::uint64_t n_prime)
{
    return divisibility_check(pattern, n_prime).ok;
}

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

/// Step-1 decompositions are expensive to search for and fully determined
/// by (pattern, n'), so they are kept for the lifetime of the process.
class CliqueTable {
public:
    std::optional<SearchResult> find(const Pattern& pattern, std::uint64_t n_prime)
    {
        std::lock_guard lock(mutex_);
        auto it = table_.find({pattern.parts(), n_prime});
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    void store(const Pattern& pattern, std::uint64_t n_prime, const SearchResult& result)
    {
        if (result.status == SearchStatus::BudgetExceeded)
            return;
        std::lock_guard lock(mutex_);
        table_.emplace(std::make_pair(pattern.parts(), n_prime), result);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::vector<std::size_t>, std::uint64_t>, SearchResult> table_;
};

CliqueTable& clique_table()
{
    static CliqueTable table;
    return table;
}

SearchResult search_clique(const Pattern& pattern, std::uint64_t n_prime, const SearchBudget& budget)
{
    if (auto cached = clique_table().find(pattern, n_prime))
        return *cached;
    SearchResult result;
    if (!admissible(pattern, n_prime)) {
        result.status = SearchStatus::NoDecomposition;
    } else {
        result = exact_cover_decompose(SmallGraph::complete(n_prime), pattern, false, budget);
    }
    clique_table().store(pattern, n_prime, result);
    return result;
}

} // namespace

DivisibilityResult divisibility_check(const Pattern& pattern, std::uint64_t n_prime)
{
    DivisibilityResult out;
    const auto e = pattern.edge_count();
    const auto pairs = choose2(n_prime);
    if (pairs % e != 0) {
        out.ok = false;
        out.reasons.push_back("C(" + std::to_string(n_prime) + ",2) = " + std::to_string(pairs) +
                              " is not divisible by |E(F)| = " + std::to_string(e));
    }
    const auto g = degree_gcd(pattern);
    if (g > 0 && (n_prime + g - 1) % g != 0) {
        out.ok = false;
        out.reasons.push_back(std::to_string(n_prime) + " - 1 is not divisible by the degree gcd " +
                              std::to_string(g));
    }
    return out;
}

std::uint64_t divisibility_period(const Pattern& pattern)
{
    const auto g = std::max<std::uint64_t>(degree_gcd(pattern), 1);
    const auto full = std::lcm(2 * pattern.edge_count(), g);
    for (std::uint64_t d = 1; d <= full; ++d) {
        if (full % d != 0)
            continue;
        bool periodic = true;
        for (std::uint64_t x = 0; x < full && periodic; ++x)
            periodic = admissible(pattern, x) == admissible(pattern, (x + d) % full);
        if (periodic)
            return d;
    }
    return full;
}

DenseParameters choose_parameters(const Pattern& pattern, std::uint64_t n, const SearchBudget& budget)
{
    DenseParameters params;
    params.n = n;
    params.p = star_parameters(pattern).p;
    params.q = divisibility_period(pattern);
    const auto p = params.p, q = params.q;

    const std::uint64_t smallest = pattern.vertex_count();
    const std::uint64_t top = n / p;
    // t = n - n' p <= pq - 1  <=>  n' p >= n - pq + 1
    const std::uint64_t floor_t = n + 1 > p * q ? (n + 1 - p * q + p - 1) / p : 0;
    const std::uint64_t bottom = std::max(smallest, floor_t);

    std::string tried;
    for (std::uint64_t n_prime = top; n_prime >= bottom && n_prime > 0; --n_prime) {
        if (!admissible(pattern, n_prime))
            continue;
        const auto result = search_clique(pattern, n_prime, budget);
        if (result.status == SearchStatus::Found) {
            params.n_prime = n_prime;
            params.r = n_prime % q;
            params.s = n_prime / q;
            params.t = n - n_prime * p;
            if (params.t > p * q - 1)
                throw Error(ErrorKind::InternalInvariant, "leftover t exceeds pq - 1");
            return params;
        }
        tried += " n'=" + std::to_string(n_prime) +
                 (result.status == SearchStatus::BudgetExceeded ? " (budget exceeded)" : " (no decomposition)");
    }
    throw Error(ErrorKind::NoFeasibleParameters,
                "no certified n' for pattern " + pattern.to_string() + " and n = " + std::to_string(n) + " (p = " +
                    std::to_string(p) + ", q = " + std::to_string(q) + ", need " + std::to_string(bottom) +
                    " <= n' <= " + std::to_string(top) + ")" + (tried.empty() ? "" : ";" + tried));
}

Decomposition step1_decompose_clique(const Pattern& pattern, std::uint64_t n_prime, const SearchBudget& budget)
{
    const auto check = divisibility_check(pattern, n_prime);
    if (!check.ok)
        throw Error(ErrorKind::NoDecomposition, "K_" + std::to_string(n_prime) + ": " + check.reasons.front());
    auto result = search_clique(pattern, n_prime, budget);
    if (result.status == SearchStatus::NoDecomposition)
        throw Error(ErrorKind::NoDecomposition, "K_" + std::to_string(n_prime) + " has no " +
                                                    pattern.to_string() + "-decomposition");
    if (result.status == SearchStatus::BudgetExceeded)
        throw Error(ErrorKind::BudgetExceeded, "search budget exhausted on K_" + std::to_string(n_prime));
    return std::move(*result.decomposition);
}

BlownUp step2_blow_up(const Decomposition& clique, std::uint64_t p)
{
    if (p == 0)
        throw Error(ErrorKind::InvalidArgument, "p must be positive");
    const std::size_t n_prime = clique.host.order();
    BlownUp out;
    out.p = p;
    out.graph = HostDescriptor::complete_multipartite(std::vector<std::size_t>(n_prime, p));
    out.placements.reserve(clique.copies.size());
    for (std::size_t c = 0; c < clique.copies.size(); ++c) {
        Placement placement;
        placement.source = c;
        for (const auto& cls : clique.copies[c].classes) {
            auto sets = cls;
            std::sort(sets.begin(), sets.end());
            std::vector<Vertex> blown;
            blown.reserve(sets.size() * p);
            for (auto x : sets)
                for (std::uint64_t t = 0; t < p; ++t)
                    blown.push_back(static_cast<Vertex>(x * p + t));
            placement.sets.push_back(std::move(sets));
            placement.classes.push_back(std::move(blown));
        }
        out.placements.push_back(std::move(placement));
    }
    return out;
}

ClassCells step3_refine(const Placement& placement, const Pattern& pattern, std::uint64_t p)
{
    ClassCells cells(pattern.k());
    for (std::size_t i = 0; i < pattern.k(); ++i) {
        const std::size_t a = pattern.part(i);
        if (p % a != 0)
            throw Error(ErrorKind::DivisibilityViolation,
                        "a_" + std::to_string(i + 1) + " = " + std::to_string(a) + " does not divide p = " +
                            std::to_string(p));
        if (placement.classes[i].size() != a * p)
            throw Error(ErrorKind::InvalidArgument, "placement class " + std::to_string(i + 1) + " has wrong size");
        for (std::size_t start = 0; start < placement.classes[i].size(); start += a)
            cells[i].emplace_back(placement.classes[i].begin() + static_cast<std::ptrdiff_t>(start),
                                  placement.classes[i].begin() + static_cast<std::ptrdiff_t>(start + a));
    }
    return cells;
}

std::vector<FCopy> step4_apply_embedded(const Placement&, const ClassCells& cells,
                                        const EmbeddedDecomposition& embedded)
{
    const auto& pattern = embedded.base.pattern;
    const std::size_t k = pattern.k();
    std::vector<std::size_t> offsets(k, 0);
    for (std::size_t i = 1; i < k; ++i)
        offsets[i] = offsets[i - 1] + embedded.base.host.parts[i - 1];

    std::vector<FCopy> out;
    out.reserve(embedded.base.copies.size());
    for (const auto& abstract : embedded.base.copies) {
        FCopy copy;
        copy.classes.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = (abstract.classes[i].front() - offsets[i]) / pattern.part(i);
            copy.classes[i] = cells[i].at(j);
        }
        out.push_back(std::move(copy));
    }
    return out;
}

std::uint64_t expected_non_edges(const DenseParameters& params)
{
    const auto n = params.n, t = params.t, p = params.p;
    return (n - t) / p * choose2(p) + choose2(t) + t * (n - t);
}

DenseCertificate assemble(const Pattern& pattern, std::uint64_t n, const SearchBudget& budget,
                          std::uint64_t non_edge_cap)
{
    DenseCertificate cert;
    cert.pattern = pattern;
    cert.params = choose_parameters(pattern, n, budget);
    const auto& params = cert.params;
    const auto p = params.p;

    // Steps 1-4.
    const auto clique = step1_decompose_clique(pattern, params.n_prime, budget);
    const auto blown = step2_blow_up(clique, p);
    const auto embedded = embedded_decompose(pattern, static_cast<std::size_t>(p));
    const auto per_placement = embedded.base.copies.size();

    std::vector<FCopy> copies(blown.placements.size() * per_placement);
    const auto placements = static_cast<std::int64_t>(blown.placements.size());
    bool failed = false;
    std::string failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t idx = 0; idx < placements; ++idx) {
        try {
            const auto& placement = blown.placements[idx];
            auto local = step4_apply_embedded(placement, step3_refine(placement, pattern, p), embedded);
            std::move(local.begin(), local.end(), copies.begin() + idx * static_cast<std::int64_t>(per_placement));
        } catch (const std::exception& e) {
#pragma omp critical(dense_failure)
            if (!failed) {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed)
        throw Error(ErrorKind::InternalInvariant, failure);

    // Step 5: t isolated vertices at the highest ids.
    HostDescriptor host = blown.graph;
    const std::uint64_t core = n - params.t;
    host.parts.insert(host.parts.end(), params.t, 1);
    for (std::uint64_t u = core; u < n; ++u)
        for (std::uint64_t v = 0; v < n; ++v)
            if (v != u && (v < core || v > u))
                host.non_edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    std::sort(host.non_edges.begin(), host.non_edges.end());
    cert.decomposition = Decomposition{std::move(host), pattern, std::move(copies), true};

    const SmallGraph g = cert.decomposition.host.to_graph();
    cert.non_edge_count = choose2(n) - g.edge_count();
    cert.non_edges_listed = cert.non_edge_count <= non_edge_cap;
    if (cert.non_edges_listed)
        cert.non_edges = g.non_edges();
    cert.bound_lhs = cert.non_edge_count;
    cert.bound_rhs_twice = (2 * p * params.q + p) * n;

    if (cert.non_edge_count != expected_non_edges(params))
        throw Error(ErrorKind::InternalInvariant, "non-edge count " + std::to_string(cert.non_edge_count) +
                                                      " differs from formula " +
                                                      std::to_string(expected_non_edges(params)));
    if (2 * cert.bound_lhs >= cert.bound_rhs_twice)
        throw Error(ErrorKind::InternalInvariant, "non-edge count violates the linear bound");
    auto report = verify_decomposition(g, pattern, cert.decomposition.copies, true);
    if (!report.ok())
        throw Error(ErrorKind::InternalInvariant, "assembled decomposition fails: " + report.violation->message);
    return cert;
}

} // namespace indec
