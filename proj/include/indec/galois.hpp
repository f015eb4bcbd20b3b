#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace indec {

/// A prime power q = p^e.
struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::uint64_t value() const;
};

/// Prime factorisation of n as ascending prime powers. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Returns the decomposition of q when it is a prime power, nothing otherwise.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Finite field GF(p^e).
///
/// Elements are residues modulo a monic irreducible polynomial of degree e,
/// stored as their coefficient vector read as a base-p integer with the
/// constant term as the least significant digit. The integers 0..q-1 are
/// therefore exactly the field elements, 0 and 1 being the additive and
/// multiplicative identities.
class GaloisField {
public:
    using Element = std::uint32_t;

    /// Throws Error(NotPrimePower) unless order is a prime power.
    explicit GaloisField(std::uint64_t order);

    std::uint64_t order() const { return order_; }
    std::uint64_t characteristic() const { return prime_; }
    unsigned degree() const { return degree_; }

    /// Coefficients c_0..c_{e-1} of the reduction modulus x^e + sum c_i x^i.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;

    std::vector<std::uint32_t> coefficients(Element a) const;
    Element from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

private:
    std::uint64_t order_;
    std::uint64_t prime_;
    unsigned degree_;
    std::vector<std::uint32_t> modulus_;
};

} // namespace indec
