// Deciding, for a degree m, whether every degree-m polynomial f over GF(2)
// satisfies
//
//   P1:  Q^m = I     <=>  f irreducible
//   P2:  o(Q) = m    <=>  f irreducible
//
// Irreducibles always satisfy both left-hand sides, so a degree fails a
// property exactly when some *reducible* f satisfies the left-hand side.
// Such an f divides x^(2^m) - x, hence is a product of distinct irreducibles
// whose degrees divide m. Counterexamples are therefore described by a
// DegreePartition: c_d distinct irreducibles of degree d for each part, with
// sum d*c_d = m, at least two factors, c_d <= N(d), and (for P2) the lcm of
// the degrees equal to m. Repeated factors never matter for P2 because o(Q)
// is undefined for them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2q/poly.hpp"

namespace gf2q {

enum class Property { P1, P2 };
enum class Method { Search, Theorem, Corollary, Brute };
enum class CorollaryVerdict { Holds, Fails, Unknown };

std::string to_string(Property p);
std::string to_string(Method m);
std::string to_string(CorollaryVerdict v);

struct Part {
    std::uint64_t degree = 1;
    std::uint64_t count = 1;

    bool operator==(const Part&) const = default;
};

/// Parts sorted by ascending degree, each degree at most once.
struct DegreePartition {
    std::vector<Part> parts;

    std::uint64_t total_degree() const;
    std::uint64_t factor_count() const;
    std::uint64_t degree_lcm() const;
    std::string to_string() const;  // "{1:2, 3:1}"

    bool operator==(const DegreePartition&) const = default;
};

struct PropertyVerdict {
    Property property = Property::P1;
    std::uint64_t m = 2;
    bool holds = true;
    std::optional<DegreePartition> witness;
    std::optional<Poly> witness_poly;
    Method method = Method::Search;
};

/// Checks every certificate invariant of `w` as a counterexample to `prop`
/// at degree m (counts capped by N(d) included).
bool is_valid_certificate(const DegreePartition& w, Property prop, std::uint64_t m);

/// True when a concrete f is a reducible polynomial of degree m satisfying
/// the left-hand side of `prop`.
bool violates_property(const Poly& f, Property prop, std::uint64_t m);

/// Exhaustive partition search. On failure the witness is the
/// lexicographically smallest one, comparing (degree, count) pairs listed
/// in ascending degree.
PropertyVerdict decide_p1_search(std::uint64_t m);
PropertyVerdict decide_p2_search(std::uint64_t m);

/// m is an odd prime or 9.
bool decide_p1_theorem(std::uint64_t m);
/// m = p^i or m = p^i q with primes p < q.
bool decide_p2_necessary(std::uint64_t m);
/// Prime powers hold; shapes outside p^i q fail; for m = p^i q the
/// q > 2^(p^i), p^i = 2 and counting rules decide what they can.
CorollaryVerdict decide_p2_corollary(std::uint64_t m);

/// Counterexample for a degree that is neither an odd prime nor 9: n
/// irreducibles of degree m/n with n the least prime factor, or the fixed
/// shapes for m = 2 and m = 4.
DegreePartition p1_theorem_witness(std::uint64_t m);

/// For m = p^i q^j with p < q and j >= 2:
/// (p-1) x deg p^(i-1) q^j, 1 x deg p^i q^(j-1), (q-p) x deg p^(i-1) q^(j-1).
DegreePartition p2_prime_power_witness(std::uint64_t p, std::uint64_t i, std::uint64_t q, std::uint64_t j);

/// Counting construction for m = p^i q where the corollary predicts failure:
/// picks the least u with u*q = 1 or 2 (mod p^i) (roles of p^i and q swapped
/// when q < p^i) and returns {1: r, p^i: l, q: p^i - u}. Throws
/// std::domain_error when the failure inequality does not hold.
DegreePartition construct_pigeonhole_witness(std::uint64_t p, std::uint64_t i, std::uint64_t q);

/// Product of the first c irreducibles of degree d for every part.
Poly materialize_witness(const DegreePartition& w);

/// Evaluates the defining biconditional on all 2^m polynomials of degree
/// m, 2 <= m <= 12.
PropertyVerdict brute_force_property(Property prop, std::uint64_t m);

/// Verdict by the requested method. Theorem and corollary rules that leave
/// m undecided fall back to search (reported as Method::Search).
PropertyVerdict classify(Property prop, std::uint64_t m, Method method);

/// classify() over [from, to] on `jobs` threads; output sorted by m and
/// independent of the thread count.
std::vector<PropertyVerdict> scan(Property prop, std::uint64_t from, std::uint64_t to, Method method,
                                  unsigned jobs);

}  // namespace gf2q
