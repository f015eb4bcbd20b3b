#pragma once

#include "indec/decomposition.hpp"
#include "indec/designs.hpp"
#include "indec/pattern.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace indec {

/// Designs TD(k, a_i) and the cell layout of F* = K_{m a_1, ..., m a_k},
/// m = prod a_i. Part i of F* is cut into m cells of a_i consecutive
/// vertices; the cell with coordinates (j_1, ..., j_k) starts at offset
/// a_i * rank(j), rank being the mixed-radix rank over radices
/// (a_1, ..., a_k), most significant first. Group q of the i-th design is
/// matched with coordinate q of the cell vectors.
class BlowupContext {
public:
    const Pattern& pattern() const { return pattern_; }
    std::uint64_t m() const { return m_; }
    const TransversalDesign& design(std::size_t i) const { return designs_[i]; }

    HostDescriptor host() const;
    std::size_t part_offset(std::size_t part) const { return offsets_[part]; }
    std::size_t part_size(std::size_t part) const { return m_ * pattern_.part(part); }

    std::uint64_t rank(const CellIndex& cell) const;
    CellIndex unrank(std::uint64_t rank) const;
    bool in_bounds(const CellIndex& cell) const;

    std::vector<Vertex> cell_vertices(std::size_t part, const CellIndex& cell) const;
    /// Part and cell holding a vertex of F*.
    std::pair<std::size_t, CellIndex> locate(Vertex v) const;

    /// The index-th codeword in lexicographic (b, c) order, index < m^2.
    Codeword codeword_at(std::uint64_t index) const;

private:
    friend BlowupContext make_context(const Pattern& pattern);

    Pattern pattern_;
    std::uint64_t m_ = 1;
    std::vector<TransversalDesign> designs_;
    std::vector<std::size_t> offsets_;
};

/// Throws UnsupportedPattern naming every a_i whose TD(k, a_i) is out of reach.
BlowupContext make_context(const Pattern& pattern);

/// Detailed representation and vertex classes of the copy labelled w.
FCopy decode_codeword(const BlowupContext& ctx, const Codeword& w);

/// All m^2 copies in lexicographic codeword order, decoded in parallel.
Decomposition blowup_decompose(const BlowupContext& ctx);
Decomposition blowup_decompose(const Pattern& pattern);

struct EdgeResolution {
    Codeword codeword;
    FCopy copy;
};

/// The copy holding edge uv of F*. Throws SamePart when u and v share a part.
EdgeResolution edge_to_copy(const BlowupContext& ctx, Vertex u, Vertex v);

namespace reference {
Decomposition blowup_decompose(const BlowupContext& ctx);
}

} // namespace indec
