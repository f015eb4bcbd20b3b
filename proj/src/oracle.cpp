#include "indec/oracle.hpp"

#include "indec/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

namespace indec {

SearchBudget SearchBudget::from_env()
{
    SearchBudget budget;
    if (const char* env = std::getenv("INDUCED_DECOMP_BUDGET_NODES")) {
        char* end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            budget.max_nodes = value;
    }
    return budget;
}

// ---------------------------------------------------------------------------
// Copy enumeration

namespace {

class CopyEnumerator {
public:
    CopyEnumerator(const SmallGraph& g, const Pattern& pattern, bool induced)
        : g_(g), pattern_(pattern), induced_(induced), classes_(pattern.k()), used_(g.order(), 0)
    {
    }

    std::vector<FCopy> run()
    {
        place(0);
        return std::move(out_);
    }

private:
    void place(std::size_t i)
    {
        if (i == pattern_.k()) {
            out_.push_back(FCopy{std::nullopt, {}, classes_});
            return;
        }
        std::vector<Vertex> pool;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (used_[v])
                continue;
            bool joined = true;
            for (std::size_t j = 0; j < i && joined; ++j)
                for (auto u : classes_[j])
                    if (!g_.adjacent(u, v)) {
                        joined = false;
                        break;
                    }
            if (joined)
                pool.push_back(v);
        }
        std::vector<Vertex> current;
        choose(i, pool, 0, current);
    }

    void choose(std::size_t i, const std::vector<Vertex>& pool, std::size_t start, std::vector<Vertex>& current)
    {
        const std::size_t need = pattern_.part(i);
        if (current.size() == need) {
            for (std::size_t j = 0; j < i; ++j)
                if (pattern_.part(j) == need && !(classes_[j] < current))
                    return;
            classes_[i] = current;
            for (auto v : current)
                used_[v] = 1;
            place(i + 1);
            for (auto v : current)
                used_[v] = 0;
            return;
        }
        const std::size_t remaining = need - current.size();
        for (std::size_t idx = start; idx + remaining <= pool.size(); ++idx) {
            const Vertex v = pool[idx];
            if (induced_) {
                bool independent = true;
                for (auto u : current)
                    if (g_.adjacent(u, v)) {
                        independent = false;
                        break;
                    }
                if (!independent)
                    continue;
            }
            current.push_back(v);
            choose(i, pool, idx + 1, current);
            current.pop_back();
        }
    }

    const SmallGraph& g_;
    const Pattern& pattern_;
    bool induced_;
    std::vector<std::vector<Vertex>> classes_;
    std::vector<char> used_;
    std::vector<FCopy> out_;
};

} // namespace

std::vector<FCopy> enumerate_copies(const SmallGraph& g, const Pattern& pattern, bool induced, std::size_t cap)
{
    if (g.order() > cap)
        throw Error(ErrorKind::CapExceeded, "copy enumeration limited to " + std::to_string(cap) +
                                                " vertices, graph has " + std::to_string(g.order()));
    return CopyEnumerator(g, pattern, induced).run();
}

// ---------------------------------------------------------------------------
// Exact cover

namespace {

struct BudgetHit {};

class ExactCover {
public:
    ExactCover(const SmallGraph& g, std::vector<FCopy> candidates, const SearchBudget& budget, Branching branching)
        : budget_(budget), branching_(branching), candidates_(std::move(candidates)),
          start_(std::chrono::steady_clock::now())
    {
        const auto edges = g.edges();
        edge_count_ = edges.size();
        std::vector<std::uint32_t> id(g.order() * g.order(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e)
            id[edges[e].u * g.order() + edges[e].v] = static_cast<std::uint32_t>(e);
        per_edge_.resize(edge_count_);
        cand_edges_.reserve(candidates_.size());
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            std::vector<std::uint32_t> ids;
            for (const auto& e : copy_edges(candidates_[c]))
                ids.push_back(id[e.u * g.order() + e.v]);
            for (auto e : ids)
                per_edge_[e].push_back(static_cast<std::uint32_t>(c));
            cand_edges_.push_back(std::move(ids));
        }
        covered_.assign(edge_count_, 0);
    }

    bool every_edge_has_candidate() const
    {
        return std::all_of(per_edge_.begin(), per_edge_.end(), [](const auto& v) { return !v.empty(); });
    }

    /// true: solution in chosen(); false: none. Throws BudgetHit.
    bool solve() { return search(0, 0); }

    std::vector<FCopy> chosen() const
    {
        std::vector<FCopy> out;
        out.reserve(chosen_.size());
        for (auto c : chosen_)
            out.push_back(candidates_[c]);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool usable(std::uint32_t c) const
    {
        for (auto e : cand_edges_[c])
            if (covered_[e])
                return false;
        return true;
    }

    void set(std::uint32_t c, char value)
    {
        for (auto e : cand_edges_[c])
            covered_[e] = value;
    }

    void tick()
    {
        ++nodes_;
        if (nodes_ > budget_.max_nodes)
            throw BudgetHit{};
        if ((nodes_ & 1023) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.max_seconds)
                throw BudgetHit{};
        }
    }

    bool search(std::size_t covered_count, std::size_t from)
    {
        if (covered_count == edge_count_)
            return true;
        std::size_t edge = from;
        if (branching_ == Branching::SmallestEdge) {
            while (covered_[edge])
                ++edge;
        } else {
            std::size_t best = std::numeric_limits<std::size_t>::max();
            for (std::size_t e = 0; e < edge_count_; ++e) {
                if (covered_[e])
                    continue;
                std::size_t options = 0;
                for (auto c : per_edge_[e])
                    options += usable(c);
                if (options < best) {
                    best = options;
                    edge = e;
                    if (options == 0)
                        return false;
                }
            }
            from = 0;
        }
        for (auto c : per_edge_[edge]) {
            if (!usable(c))
                continue;
            tick();
            set(c, 1);
            chosen_.push_back(c);
            const std::size_t next = branching_ == Branching::SmallestEdge ? edge + 1 : 0;
            if (search(covered_count + cand_edges_[c].size(), next))
                return true;
            chosen_.pop_back();
            set(c, 0);
        }
        return false;
    }

    SearchBudget budget_;
    Branching branching_;
    std::vector<FCopy> candidates_;
    std::chrono::steady_clock::time_point start_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::uint32_t>> per_edge_;
    std::vector<std::vector<std::uint32_t>> cand_edges_;
    std::vector<char> covered_;
    std::vector<std::uint32_t> chosen_;
    std::uint64_t nodes_ = 0;
};

} // namespace

SearchResult exact_cover_decompose(const SmallGraph& g, const Pattern& pattern, bool induced,
                                   const SearchBudget& budget, Branching branching, std::size_t cap)
{
    if (g.order() > cap)
        throw Error(ErrorKind::CapExceeded, "exact cover limited to " + std::to_string(cap) +
                                                " vertices, graph has " + std::to_string(g.order()));
    SearchResult result;
    auto found = [&](std::vector<FCopy> copies) {
        result.status = SearchStatus::Found;
        result.decomposition = Decomposition{HostDescriptor::of_graph(g), pattern, std::move(copies), induced};
    };
    if (g.edge_count() == 0) {
        found({});
        return result;
    }
    if (g.edge_count() % pattern.edge_count() != 0) {
        result.status = SearchStatus::NoDecomposition;
        return result;
    }
    ExactCover solver(g, enumerate_copies(g, pattern, induced, cap), budget, branching);
    if (!solver.every_edge_has_candidate()) {
        result.status = SearchStatus::NoDecomposition;
        return result;
    }
    try {
        if (solver.solve())
            found(solver.chosen());
        else
            result.status = SearchStatus::NoDecomposition;
    } catch (const BudgetHit&) {
        result.status = SearchStatus::BudgetExceeded;
    }
    result.nodes = solver.nodes();
    return result;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

std::string vid(Vertex v) { return std::to_string(v + 1); }

std::optional<Violation> check_copy(const SmallGraph& g, const std::vector<std::size_t>& sorted_parts,
                                    const FCopy& copy, std::size_t index, bool induced, std::vector<char>& mark)
{
    auto fail = [&](std::string kind, std::string msg, std::vector<Vertex> witness) {
        return Violation{std::move(kind), "copy " + std::to_string(index) + ": " + std::move(msg),
                         std::move(witness), index};
    };
    std::vector<std::size_t> sizes;
    for (const auto& cls : copy.classes)
        sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    if (sizes != sorted_parts)
        return fail("class_sizes", "class sizes do not match the pattern", {});

    std::optional<Violation> bad;
    std::vector<Vertex> touched;
    for (const auto& cls : copy.classes) {
        for (auto v : cls) {
            if (v >= g.order()) {
                bad = fail("vertex_out_of_range", "vertex " + vid(v) + " not in host", {v});
                break;
            }
            if (mark[v]) {
                bad = fail("overlapping_classes", "vertex " + vid(v) + " used twice", {v});
                break;
            }
            mark[v] = 1;
            touched.push_back(v);
        }
        if (bad)
            break;
    }
    for (auto v : touched)
        mark[v] = 0;
    if (bad)
        return bad;

    for (std::size_t i = 0; i < copy.classes.size(); ++i)
        for (std::size_t j = i + 1; j < copy.classes.size(); ++j)
            for (auto u : copy.classes[i])
                for (auto v : copy.classes[j])
                    if (!g.adjacent(u, v)) {
                        Edge e(u, v);
                        return fail("missing_cross_edge", "pair " + vid(e.u) + " " + vid(e.v) + " is not an edge",
                                    {e.u, e.v});
                    }
    if (induced) {
        for (const auto& cls : copy.classes)
            for (std::size_t a = 0; a < cls.size(); ++a)
                for (std::size_t b = a + 1; b < cls.size(); ++b)
                    if (g.adjacent(cls[a], cls[b])) {
                        Edge e(cls[a], cls[b]);
                        return fail("class_not_independent",
                                    "edge " + vid(e.u) + " " + vid(e.v) + " inside a class", {e.u, e.v});
                    }
    }
    return std::nullopt;
}

std::vector<std::size_t> sorted_parts(const Pattern& pattern)
{
    auto parts = pattern.parts();
    std::sort(parts.begin(), parts.end());
    return parts;
}

} // namespace

namespace reference {

VerifyReport verify_decomposition(const SmallGraph& g, const Pattern& pattern, const std::vector<FCopy>& copies,
                                  bool induced)
{
    const auto parts = sorted_parts(pattern);
    const std::size_t n = g.order();
    std::vector<char> mark(n, 0);
    std::vector<std::int64_t> owner(n * n, -1);
    for (std::size_t c = 0; c < copies.size(); ++c) {
        if (auto v = check_copy(g, parts, copies[c], c, induced, mark))
            return {std::move(v)};
        for (const auto& e : copy_edges(copies[c])) {
            auto& slot = owner[e.u * n + e.v];
            if (slot >= 0)
                return {Violation{"edge_reused",
                                  "copy " + std::to_string(c) + ": edge " + vid(e.u) + " " + vid(e.v) +
                                      " already used by copy " + std::to_string(slot),
                                  {e.u, e.v}, c}};
            slot = static_cast<std::int64_t>(c);
        }
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && owner[u * n + v] < 0)
                return {Violation{"edge_uncovered", "edge " + vid(u) + " " + vid(v) + " lies in no copy",
                                  {u, v}, std::nullopt}};
    return {};
}

} // namespace reference

VerifyReport verify_decomposition(const SmallGraph& g, const Pattern& pattern, const std::vector<FCopy>& copies,
                                  bool induced)
{
    const auto parts = sorted_parts(pattern);
    const std::size_t n = g.order();
    const auto count = static_cast<std::int64_t>(copies.size());

    // Failure paths defer to the serial scan so both report the same witness.
    std::int64_t first_bad = count;
#pragma omp parallel
    {
        std::vector<char> mark(n, 0);
#pragma omp for schedule(dynamic, 16) reduction(min : first_bad)
        for (std::int64_t c = 0; c < count; ++c)
            if (c < first_bad && check_copy(g, parts, copies[c], static_cast<std::size_t>(c), induced, mark))
                first_bad = std::min(first_bad, c);
    }
    if (first_bad < count)
        return reference::verify_decomposition(g, pattern, copies, induced);

    std::vector<std::uint32_t> tally(n * n, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < count; ++c) {
        const auto& classes = copies[c].classes;
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                for (auto u : classes[i])
                    for (auto v : classes[j]) {
                        const std::size_t slot = u < v ? u * n + v : v * n + u;
#pragma omp atomic
                        ++tally[slot];
                    }
    }

    const auto total = static_cast<std::int64_t>(n * n);
    int repeated = 0;
    std::int64_t first_uncovered = total;
#pragma omp parallel for reduction(max : repeated) reduction(min : first_uncovered)
    for (std::int64_t slot = 0; slot < total; ++slot) {
        const auto u = static_cast<Vertex>(slot / static_cast<std::int64_t>(n));
        const auto v = static_cast<Vertex>(slot % static_cast<std::int64_t>(n));
        if (tally[slot] > 1)
            repeated = 1;
        if (u < v && tally[slot] == 0 && g.adjacent(u, v))
            first_uncovered = std::min(first_uncovered, slot);
    }
    if (repeated)
        return reference::verify_decomposition(g, pattern, copies, induced);
    if (first_uncovered < total) {
        const auto u = static_cast<Vertex>(first_uncovered / static_cast<std::int64_t>(n));
        const auto v = static_cast<Vertex>(first_uncovered % static_cast<std::int64_t>(n));
        return {Violation{"edge_uncovered", "edge " + vid(u) + " " + vid(v) + " lies in no copy", {u, v},
                          std::nullopt}};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Non-neighbour conditions

bool non_neighbor_check(const SmallGraph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 >= g.order())
            return false;
    return true;
}

bool non_neighbor_check(const Pattern& pattern)
{
    return std::all_of(pattern.parts().begin(), pattern.parts().end(), [](std::size_t a) { return a >= 2; });
}

bool non_isolated_have_non_neighbor(const SmallGraph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto d = g.degree(v);
        if (d > 0 && d + 1 >= g.order())
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

constexpr std::size_t max_mask_order = 11; // C(11,2) = 55 bits

std::vector<std::vector<int>> pair_table(std::size_t n)
{
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    int next = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            idx[u][v] = idx[v][u] = next++;
    return idx;
}

struct Canonical {
    std::uint64_t mask = 0;
    /// relabel[old] = new
    std::vector<Vertex> relabel;
};

Canonical canonicalize(const SmallGraph& g)
{
    const std::size_t n = g.order();
    if (n > max_mask_order)
        throw Error(ErrorKind::CapExceeded, "canonical form limited to " + std::to_string(max_mask_order) + " vertices");
    const auto idx = pair_table(n);

    // Vertex invariant: degree, then sorted neighbour degrees.
    std::vector<std::vector<std::size_t>> inv(n);
    for (Vertex v = 0; v < n; ++v) {
        inv[v].push_back(g.degree(v));
        std::vector<std::size_t> nd;
        for (Vertex u = 0; u < n; ++u)
            if (g.adjacent(u, v))
                nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return inv[a] < inv[b]; });

    // Cells of equal invariant occupy consecutive new labels; permute within.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && inv[order[j]] == inv[order[i]])
            ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    Canonical best;
    best.mask = std::numeric_limits<std::uint64_t>::max();
    std::vector<Vertex> arrangement = order; // arrangement[new] = old
    auto evaluate = [&] {
        std::uint64_t mask = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (g.adjacent(arrangement[a], arrangement[b]))
                    mask |= std::uint64_t{1} << idx[a][b];
        if (mask < best.mask) {
            best.mask = mask;
            best.relabel.assign(n, 0);
            for (std::size_t a = 0; a < n; ++a)
                best.relabel[arrangement[a]] = static_cast<Vertex>(a);
        }
    };
    auto recurse = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(arrangement.begin() + lo, arrangement.begin() + hi);
        do {
            self(self, cell + 1);
        } while (std::next_permutation(arrangement.begin() + lo, arrangement.begin() + hi));
    };
    recurse(recurse, 0);
    if (n == 0)
        best.mask = 0;
    return best;
}

} // namespace

std::uint64_t edge_mask(const SmallGraph& g)
{
    if (g.order() > max_mask_order)
        throw Error(ErrorKind::CapExceeded, "edge masks limited to " + std::to_string(max_mask_order) + " vertices");
    std::uint64_t mask = 0;
    int bit = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v, ++bit)
            if (g.adjacent(u, v))
                mask |= std::uint64_t{1} << bit;
    return mask;
}

SmallGraph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    SmallGraph g(n);
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1)
                g.add_edge(u, v);
    return g;
}

std::uint64_t canonical_mask(const SmallGraph& g) { return canonicalize(g).mask; }

// ---------------------------------------------------------------------------
// Exact cex

namespace {

/// Shared state of one cex computation: the necessary-condition filters and
/// a cache of decomposability per canonical form.
class CexOracle {
public:
    CexOracle(std::size_t n, const Pattern& pattern, const SearchBudget& budget)
        : n_(n), pattern_(pattern), budget_(budget), prop3_(non_neighbor_check(pattern)), allowed_(n, 0)
    {
        // Degrees reachable as sums of vertex degrees of the pattern.
        allowed_[0] = 1;
        const auto s = pattern.vertex_count();
        for (std::size_t d = 1; d < n; ++d)
            for (auto a : pattern.parts())
                if (s - a <= d && allowed_[d - (s - a)])
                    allowed_[d] = 1;
        pairs_.reserve(n * (n - 1) / 2);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs_.emplace_back(u, v);
    }

    std::size_t pair_count() const { return pairs_.size(); }

    std::uint64_t full_mask() const
    {
        return pairs_.empty() ? 0 : (~std::uint64_t{0} >> (64 - pairs_.size()));
    }

    bool passes_filters(std::uint64_t mask) const
    {
        std::vector<std::size_t> deg(n_, 0);
        for (std::size_t i = 0; i < pairs_.size(); ++i)
            if (mask >> i & 1) {
                ++deg[pairs_[i].u];
                ++deg[pairs_[i].v];
            }
        for (auto d : deg) {
            if (!allowed_[d])
                return false;
            if (prop3_ && d > 0 && d + 1 >= n_)
                return false;
        }
        return true;
    }

    /// Found or NoDecomposition; BudgetExceeded is returned, not thrown.
    SearchStatus classify(std::uint64_t mask)
    {
        const auto canon = canonicalize(graph_from_mask(n_, mask)).mask;
        {
            std::lock_guard lock(mutex_);
            auto it = cache_.find(canon);
            if (it != cache_.end())
                return it->second;
        }
        auto result = exact_cover_decompose(graph_from_mask(n_, canon), pattern_, true, budget_);
        std::lock_guard lock(mutex_);
        cache_.emplace(canon, result.status);
        return result.status;
    }

    CexResult finish(std::uint64_t mask) const
    {
        CexResult out;
        out.n = n_;
        out.witness = graph_from_mask(n_, mask);
        out.value = pairs_.size() - out.witness.edge_count();
        // Solve the canonical representative and map the copies back so the
        // witness decomposition does not depend on a second search.
        auto canon = canonicalize(out.witness);
        auto solved = exact_cover_decompose(graph_from_mask(n_, canon.mask), pattern_, true, budget_);
        if (solved.status != SearchStatus::Found)
            throw Error(ErrorKind::InternalInvariant, "witness lost its decomposition");
        std::vector<Vertex> back(n_);
        for (Vertex v = 0; v < n_; ++v)
            back[canon.relabel[v]] = v;
        auto copies = std::move(solved.decomposition->copies);
        for (auto& copy : copies)
            for (auto& cls : copy.classes) {
                for (auto& v : cls)
                    v = back[v];
                std::sort(cls.begin(), cls.end());
            }
        out.decomposition = Decomposition{HostDescriptor::of_graph(out.witness), pattern_, std::move(copies), true};
        return out;
    }

    std::uint64_t clear_bits(const std::vector<std::size_t>& combo) const
    {
        std::uint64_t mask = full_mask();
        for (auto i : combo)
            mask &= ~(std::uint64_t{1} << i);
        return mask;
    }

private:
    std::size_t n_;
    Pattern pattern_;
    SearchBudget budget_;
    bool prop3_;
    std::vector<char> allowed_;
    std::vector<Edge> pairs_;
    std::mutex mutex_;
    std::unordered_map<std::uint64_t, SearchStatus> cache_;
};

/// Advances combo (strictly increasing, values < limit) to its lexicographic
/// successor; positions before `fixed` never change.
bool next_combination(std::vector<std::size_t>& combo, std::size_t limit, std::size_t fixed)
{
    const std::size_t r = combo.size();
    std::size_t i = r;
    while (i > fixed) {
        --i;
        if (combo[i] < limit - (r - i)) {
            ++combo[i];
            for (std::size_t j = i + 1; j < r; ++j)
                combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void check_cex_args(std::size_t n, std::size_t cap)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "cex needs n >= 1");
    if (n > cap || n > max_mask_order)
        throw Error(ErrorKind::CapExceeded,
                    "cex_exact limited to n <= " + std::to_string(std::min(cap, max_mask_order)));
}

[[noreturn]] void budget_failure(std::size_t n, std::size_t nonedges)
{
    throw Error(ErrorKind::BudgetExceeded, "search budget exhausted while testing graphs on " + std::to_string(n) +
                                               " vertices with " + std::to_string(nonedges) + " non-edges");
}

} // namespace

namespace reference {

CexResult cex_exact(std::size_t n, const Pattern& pattern, const SearchBudget& budget, std::size_t cap)
{
    check_cex_args(n, cap);
    CexOracle oracle(n, pattern, budget);
    const std::size_t total = oracle.pair_count();
    for (std::size_t d = 0; d <= total; ++d) {
        if ((total - d) % pattern.edge_count() != 0)
            continue;
        std::vector<std::size_t> combo(d);
        std::iota(combo.begin(), combo.end(), std::size_t{0});
        do {
            const auto mask = oracle.clear_bits(combo);
            if (!oracle.passes_filters(mask))
                continue;
            const auto status = oracle.classify(mask);
            if (status == SearchStatus::Found)
                return oracle.finish(mask);
            if (status == SearchStatus::BudgetExceeded)
                budget_failure(n, d);
        } while (next_combination(combo, total, 0));
    }
    throw Error(ErrorKind::InternalInvariant, "empty graph must decompose");
}

} // namespace reference

CexResult cex_exact(std::size_t n, const Pattern& pattern, const SearchBudget& budget, std::size_t cap)
{
    check_cex_args(n, cap);
    CexOracle oracle(n, pattern, budget);
    const std::size_t total = oracle.pair_count();
    for (std::size_t d = 0; d <= total; ++d) {
        if ((total - d) % pattern.edge_count() != 0)
            continue;
        if (d == 0) {
            const auto mask = oracle.full_mask();
            if (oracle.passes_filters(mask)) {
                const auto status = oracle.classify(mask);
                if (status == SearchStatus::Found)
                    return oracle.finish(mask);
                if (status == SearchStatus::BudgetExceeded)
                    budget_failure(n, d);
            }
            continue;
        }

        // One task per leading non-edge; each records the first decisive
        // event in its own lexicographic range, and the earliest range wins.
        enum class Event : int { None, Found, Budget };
        const std::size_t leads = total - d + 1;
        std::vector<Event> events(leads, Event::None);
        std::vector<std::uint64_t> masks(leads, 0);
        std::atomic<std::int64_t> decided(static_cast<std::int64_t>(leads));

#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t lead = 0; lead < static_cast<std::int64_t>(leads); ++lead) {
            if (lead > decided.load())
                continue;
            std::vector<std::size_t> combo(d);
            for (std::size_t i = 0; i < d; ++i)
                combo[i] = static_cast<std::size_t>(lead) + i;
            do {
                if (lead > decided.load())
                    break;
                const auto mask = oracle.clear_bits(combo);
                if (!oracle.passes_filters(mask))
                    continue;
                const auto status = oracle.classify(mask);
                if (status == SearchStatus::NoDecomposition)
                    continue;
                events[lead] = status == SearchStatus::Found ? Event::Found : Event::Budget;
                masks[lead] = mask;
                auto current = decided.load();
                while (lead < current && !decided.compare_exchange_weak(current, lead)) {
                }
                break;
            } while (next_combination(combo, total, 1));
        }

        for (std::size_t lead = 0; lead < leads; ++lead) {
            if (events[lead] == Event::Found)
                return oracle.finish(masks[lead]);
            if (events[lead] == Event::Budget)
                budget_failure(n, d);
        }
    }
    throw Error(ErrorKind::InternalInvariant, "empty graph must decompose");
}

} // namespace indec
