#pragma once

#include "indec/decomposition.hpp"
#include "indec/oracle.hpp"
#include "indec/pattern.hpp"

#include <cstdint>
#include <vector>

namespace indec {

/// A decomposition of K_{p a_1, ..., p a_k} into p^2 copies of
/// K_{a_1, ..., a_k} in which every class of every copy is exactly one of
/// the cells cells[i][0..p-1] of part i.
struct EmbeddedDecomposition {
    Decomposition base;
    std::size_t p = 0;
    std::vector<std::vector<std::vector<Vertex>>> cells;
};

/// Substitutes the j-th consecutive a_i-block of part i for point (i, j) of
/// TD(k, p); copies follow the design's block order. Throws UnsupportedP
/// when TD(k, p) is out of reach.
EmbeddedDecomposition embedded_decompose(const Pattern& pattern, std::size_t p);

/// Copy count, cell layout and class/cell coincidence, then the generic
/// induced-decomposition check.
VerifyReport verify_embedded(const EmbeddedDecomposition& d);

struct StarParameters {
    std::uint64_t p = 0;
    Pattern amplified;
};

inline constexpr std::uint64_t default_star_cap = 10'000;

/// Smallest p > 1 that is a multiple of prod a_i with TD(k, p) and every
/// TD(k, p a_i) constructible. Throws SearchExhausted past cap.
StarParameters star_parameters(const Pattern& pattern, std::uint64_t cap = default_star_cap);

} // namespace indec
