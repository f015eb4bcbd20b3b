#include "indec/galois.hpp"

#include "indec/error.hpp"

#include <limits>
#include <string>

namespace indec {

std::uint64_t PrimePower::value() const
{
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; ++i)
        v *= prime;
    return v;
}

std::vector<PrimePower> factorize(std::uint64_t n)
{
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        PrimePower pp{d, 0};
        while (n % d == 0) {
            n /= d;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q)
{
    auto f = factorize(q);
    if (f.size() != 1)
        return std::nullopt;
    return f.front();
}

namespace {

using Poly = std::vector<std::uint32_t>; // c_0 first; trailing zeros trimmed

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly monic_from_index(std::uint64_t index, unsigned degree, std::uint32_t p)
{
    Poly poly(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        poly[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    poly[degree] = 1;
    return poly;
}

bool is_irreducible(const Poly& f, std::uint32_t p)
{
    const unsigned degree = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= degree / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty())
                return false;
        }
    }
    return true;
}

} // namespace

GaloisField::GaloisField(std::uint64_t order) : order_(order)
{
    auto pp = as_prime_power(order);
    if (!pp)
        throw Error(ErrorKind::NotPrimePower, std::to_string(order) + " is not a prime power");
    if (order > std::numeric_limits<Element>::max())
        throw Error(ErrorKind::InvalidArgument, "field order " + std::to_string(order) + " too large");
    prime_ = pp->prime;
    degree_ = pp->exponent;

    const auto p = static_cast<std::uint32_t>(prime_);
    if (degree_ == 1) {
        modulus_ = {0}; // x
        return;
    }
    // Smallest monic irreducible, candidates ordered by their base-p index.
    for (std::uint64_t idx = 0; idx < order_; ++idx) {
        Poly candidate = monic_from_index(idx, degree_, p);
        if (is_irreducible(candidate, p)) {
            modulus_.assign(candidate.begin(), candidate.end() - 1);
            return;
        }
    }
    throw Error(ErrorKind::InternalInvariant, "no irreducible polynomial found");
}

std::vector<std::uint32_t> GaloisField::coefficients(Element a) const
{
    std::vector<std::uint32_t> c(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        c[i] = static_cast<std::uint32_t>(a % prime_);
        a = static_cast<Element>(a / prime_);
    }
    return c;
}

GaloisField::Element GaloisField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const
{
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        v = v * prime_ + coeffs[i] % prime_;
    return static_cast<Element>(v);
}

GaloisField::Element GaloisField::add(Element a, Element b) const
{
    if (degree_ == 1)
        return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % prime_);
    auto ca = coefficients(a);
    auto cb = coefficients(b);
    for (unsigned i = 0; i < degree_; ++i)
        ca[i] = static_cast<std::uint32_t>((ca[i] + cb[i]) % prime_);
    return from_coefficients(ca);
}

GaloisField::Element GaloisField::neg(Element a) const
{
    auto ca = coefficients(a);
    for (auto& c : ca)
        c = static_cast<std::uint32_t>((prime_ - c) % prime_);
    return from_coefficients(ca);
}

GaloisField::Element GaloisField::mul(Element a, Element b) const
{
    if (degree_ == 1)
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % prime_);
    const auto p = static_cast<std::uint32_t>(prime_);
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    Poly prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i)
        for (unsigned j = 0; j < degree_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
    Poly mod(modulus_.begin(), modulus_.end());
    mod.push_back(1);
    Poly rem = poly_mod(std::move(prod), mod, p);
    rem.resize(degree_, 0);
    return from_coefficients(rem);
}

} // namespace indec
