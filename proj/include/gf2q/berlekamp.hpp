// The Berlekamp matrix Q of a polynomial f over GF(2), the order o(f),
// squarefree decomposition and Berlekamp's nullspace factorization.
//
// Q is m x m for deg f = m; row i (0-based) holds x^(2i) mod f. Acting on
// row vectors, Q is the squaring map on GF(2)[x]/(f).
//
// Two characterisations of Q^m = I are easy to conflate. The one that holds
// is "f divides x^(2^m) - x" (see divides_x2m_minus_x). Squarefreeness is
// only equivalent to Q having *some* finite order, i.e. being invertible;
// (x^2+x+1)(x^3+x+1) is squarefree of degree 5 yet Q^5 != I.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gf2q/linalg.hpp"
#include "gf2q/poly.hpp"

namespace gf2q {

inline constexpr std::size_t kDefaultMaxDegree = 4096;

struct FactorPower {
    Poly poly;
    std::uint64_t multiplicity = 1;

    bool operator==(const FactorPower&) const = default;
};

/// Irreducible factors with multiplicities, sorted by (degree, value).
struct Factorization {
    std::vector<FactorPower> factors;

    Poly product() const;
    std::size_t distinct_count() const noexcept { return factors.size(); }
    bool is_squarefree() const noexcept;

    bool operator==(const Factorization&) const = default;
};

/// o(f): least k >= 1 with Q^k = I, defined for squarefree f only.
struct PolyOrder {
    std::uint64_t value = 1;

    bool operator==(const PolyOrder&) const = default;
};

// Integer helpers. lcm throws std::overflow_error instead of wrapping.
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_of(const std::vector<std::uint64_t>& values);
/// lcm(1, 2, ..., n).
std::uint64_t lcm_up_to(std::uint64_t n);

/// Throws std::domain_error for constant f, std::length_error above max_degree.
BitMatrix build_q(const Poly& f, std::size_t max_degree = kDefaultMaxDegree);

/// coeffs(a) * Q as a polynomial; equals square_mod(a, f).
Poly frobenius_apply(const BitMatrix& q, const Poly& a, const Poly& f);

/// Squarefree, pairwise coprime parts with their exponents (ascending).
std::vector<FactorPower> squarefree_decompose(const Poly& f);

Factorization factor(const Poly& f, std::size_t max_degree = kDefaultMaxDegree);

/// lcm of the degrees of the irreducible factors; std::domain_error when f
/// has a repeated factor.
PolyOrder poly_order(const Poly& f, std::size_t max_degree = kDefaultMaxDegree);
/// Same, from an existing factorization.
std::optional<PolyOrder> order_of(const Factorization& fac);

/// x^(2^m) == x (mod f) with m = deg f.
bool divides_x2m_minus_x(const Poly& f);

/// Q^m == I, evaluated on the matrix.
bool q_power_degree_is_identity(const Poly& f, std::size_t max_degree = kDefaultMaxDegree);
/// Q invertible; holds exactly for squarefree f.
bool q_is_invertible(const Poly& f, std::size_t max_degree = kDefaultMaxDegree);

/// Nullity of Q - I, the number of distinct irreducible factors of a
/// squarefree f.
std::size_t berlekamp_nullity(const Poly& f, std::size_t max_degree = kDefaultMaxDegree);

}  // namespace gf2q
