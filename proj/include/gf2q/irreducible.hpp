// Irreducibility over GF(2): Rabin's test, the necklace count N(l) and
// ascending enumeration of irreducibles of a fixed degree.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gf2q/poly.hpp"

namespace gf2q {

using BigInt = boost::multiprecision::cpp_int;

struct IrreducibleCount {
    std::uint64_t degree = 1;
    BigInt count;
};

/// Rabin: x^(2^m) = x mod f, and gcd(x^(2^(m/r)) - x, f) = 1 for each
/// prime r | m. Throws std::domain_error on constants.
bool is_irreducible(const Poly& f);

int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Exact N(l) = (1/l) * sum_{d | l} mu(d) 2^(l/d).
IrreducibleCount count_irreducible(std::uint64_t degree);

/// min(N(l), cap) without big integers.
std::uint64_t count_at_most(std::uint64_t degree, std::uint64_t cap);

/// The k numerically smallest irreducibles of the given degree, ascending.
/// Throws std::domain_error when k > N(degree).
std::vector<Poly> first_k_irreducibles(std::uint64_t degree, std::uint64_t k);

}  // namespace gf2q
