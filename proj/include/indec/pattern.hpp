#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indec {

/// Part sizes (a_1, ..., a_k) of the complete multipartite pattern
/// K_{a_1,...,a_k}; k >= 2, every a_i >= 1.
class Pattern {
public:
    Pattern() = default;
    /// Throws InvalidArgument on k < 2, a zero part, or a product that
    /// overflows 32 bits.
    explicit Pattern(std::vector<std::size_t> parts);

    /// Parses a comma-separated list such as "1,2" or "2, 2, 3".
    static Pattern parse(std::string_view text);

    std::size_t k() const { return parts_.size(); }
    std::size_t part(std::size_t i) const { return parts_[i]; }
    const std::vector<std::size_t>& parts() const { return parts_; }

    /// m = prod a_i
    std::uint64_t product() const;
    /// sum over i < j of a_i a_j
    std::uint64_t edge_count() const;
    std::uint64_t vertex_count() const;

    /// "(1,2)"
    std::string to_string() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<std::size_t> parts_;
};

} // namespace indec
