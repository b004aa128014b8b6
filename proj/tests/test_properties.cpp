#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf2q/berlekamp.hpp"
#include "gf2q/irreducible.hpp"
#include "gf2q/properties.hpp"

using namespace gf2q;

namespace {

DegreePartition W(std::vector<Part> parts) { return DegreePartition{std::move(parts)}; }

bool is_prime_power(std::uint64_t m) { return prime_factors(m).size() == 1; }

void check_materialized(const PropertyVerdict& v) {
    REQUIRE(v.witness);
    CHECK(is_valid_certificate(*v.witness, v.property, v.m));
    const Poly f = materialize_witness(*v.witness);
    CHECK(f.deg() == v.m);
    CHECK_FALSE(is_irreducible(f));
    CHECK(is_squarefree(f));
    if (v.property == Property::P1) {
        CHECK(divides_x2m_minus_x(f));
    } else {
        CHECK(poly_order(f).value == v.m);
    }
    CHECK(violates_property(f, v.property, v.m));
}

}  // namespace

TEST_CASE("decide_p1_search") {
    auto v2 = decide_p1_search(2);
    CHECK_FALSE(v2.holds);
    CHECK(v2.witness == W({{1, 2}}));
    CHECK(v2.method == Method::Search);
    CHECK(decide_p1_search(7).holds);
    CHECK(decide_p1_search(9).holds);
    CHECK_FALSE(decide_p1_search(7).witness);
    CHECK(decide_p1_search(25).witness == W({{5, 5}}));
    CHECK(decide_p1_search(4).witness == W({{1, 2}, {2, 1}}));
    CHECK(decide_p1_search(6).witness == W({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(decide_p1_search(12).witness == W({{1, 1}, {2, 1}, {3, 1}, {6, 1}}));
    CHECK(decide_p1_search(15).witness == W({{1, 2}, {3, 1}, {5, 2}}));
    CHECK(decide_p1_search(10).witness == W({{5, 2}}));
    CHECK_THROWS_AS(decide_p1_search(1), std::invalid_argument);
}

TEST_CASE("decide_p1_theorem") {
    CHECK(decide_p1_theorem(3));
    CHECK(decide_p1_theorem(9));
    CHECK_FALSE(decide_p1_theorem(4));
    CHECK_FALSE(decide_p1_theorem(2));
    CHECK_FALSE(decide_p1_theorem(27));
    CHECK(decide_p1_theorem(1999));
    CHECK_THROWS_AS(decide_p1_theorem(0), std::invalid_argument);
}

TEST_CASE("P1 search reproduces the odd-prime-or-9 rule for m <= 600") {
    for (std::uint64_t m = 2; m <= 600; ++m) CHECK_MESSAGE(decide_p1_search(m).holds == decide_p1_theorem(m), "m = " << m);
}

TEST_CASE("decide_p2_search") {
    CHECK(decide_p2_search(6).witness == W({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(decide_p2_search(8).holds);
    CHECK(decide_p2_search(12).witness == W({{1, 1}, {3, 1}, {4, 2}}));
    CHECK(decide_p2_search(18).witness == W({{1, 1}, {2, 1}, {3, 2}, {9, 1}}));
    CHECK(decide_p2_search(24).witness == W({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {8, 1}}));
    CHECK(decide_p2_search(30).witness == W({{1, 1}, {2, 1}, {3, 2}, {5, 1}, {6, 1}, {10, 1}}));
    CHECK(decide_p2_search(10).holds);
    CHECK(decide_p2_search(25).holds);
    CHECK(decide_p2_search(33).holds);
    CHECK_THROWS_AS(decide_p2_search(1), std::invalid_argument);
}

TEST_CASE("decide_p2_necessary") {
    CHECK(decide_p2_necessary(12));
    CHECK_FALSE(decide_p2_necessary(18));
    CHECK_FALSE(decide_p2_necessary(30));
    CHECK(decide_p2_necessary(8));
    CHECK(decide_p2_necessary(2));
    CHECK(decide_p2_necessary(20));
    CHECK(decide_p2_necessary(45));
    CHECK_FALSE(decide_p2_necessary(50));
    CHECK_THROWS_AS(decide_p2_necessary(1), std::invalid_argument);
}

TEST_CASE("decide_p2_corollary") {
    CHECK(decide_p2_corollary(10) == CorollaryVerdict::Holds);
    CHECK(decide_p2_corollary(6) == CorollaryVerdict::Fails);
    CHECK(decide_p2_corollary(24) == CorollaryVerdict::Fails);
    CHECK(decide_p2_corollary(33) == CorollaryVerdict::Holds);
    CHECK(decide_p2_corollary(15) == CorollaryVerdict::Fails);
    CHECK(decide_p2_corollary(16) == CorollaryVerdict::Holds);
    CHECK(decide_p2_corollary(30) == CorollaryVerdict::Fails);
    CHECK_THROWS_AS(decide_p2_corollary(1), std::invalid_argument);
}

TEST_CASE("materialize_witness") {
    CHECK(materialize_witness(W({{1, 2}})) == parse("x^2+x"));
    CHECK(materialize_witness(W({{1, 1}, {2, 1}, {3, 1}})) == parse("x") * parse("x^2+x+1") * parse("x^3+x+1"));
    const Poly f = materialize_witness(W({{3, 2}}));
    CHECK(f == parse("x^3+x+1") * parse("x^3+x^2+1"));
    CHECK(factor(f).factors == std::vector<FactorPower>{{parse("x^3+x+1"), 1}, {parse("x^3+x^2+1"), 1}});
    CHECK(poly_order(materialize_witness(W({{1, 1}, {2, 1}, {3, 1}}))).value == 6);
    CHECK_THROWS_AS(materialize_witness(W({{2, 2}})), std::domain_error);
}

TEST_CASE("construct_pigeonhole_witness") {
    CHECK(construct_pigeonhole_witness(2, 1, 3) == W({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(construct_pigeonhole_witness(3, 1, 5) == W({{1, 2}, {3, 1}, {5, 2}}));
    // m = 24 = 2^3 * 3, roles exchanged: 8 = 2 (mod 3), l = (8 - 2) / 3
    CHECK(construct_pigeonhole_witness(2, 3, 3) == W({{1, 2}, {3, 2}, {8, 2}}));
    CHECK_THROWS_WITH_AS(construct_pigeonhole_witness(2, 1, 5), doctest::Contains("no witness"), std::domain_error);
    CHECK_THROWS_AS(construct_pigeonhole_witness(3, 1, 11), std::domain_error);
    CHECK_THROWS_AS(construct_pigeonhole_witness(4, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(construct_pigeonhole_witness(5, 1, 3), std::invalid_argument);
}

TEST_CASE("every pigeonhole witness up to 500 is a valid P2 certificate") {
    int built = 0;
    for (std::uint64_t m = 6; m <= 500; ++m) {
        const auto primes = prime_factors(m);
        if (primes.size() != 2 || !decide_p2_necessary(m)) continue;
        std::uint64_t i = 0;
        for (std::uint64_t r = m; r % primes[0] == 0; r /= primes[0]) ++i;
        if (decide_p2_corollary(m) != CorollaryVerdict::Fails) continue;
        const auto w = construct_pigeonhole_witness(primes[0], i, primes[1]);
        CHECK_MESSAGE(is_valid_certificate(w, Property::P2, m), "m = " << m << " " << w.to_string());
        ++built;
    }
    CHECK(built > 10);
}

TEST_CASE("prime-power shape witness") {
    CHECK(p2_prime_power_witness(2, 1, 3, 2) == W({{3, 1}, {6, 1}, {9, 1}}));
    CHECK(is_valid_certificate(p2_prime_power_witness(2, 2, 5, 2), Property::P2, 100));
    CHECK(is_valid_certificate(p2_prime_power_witness(3, 1, 5, 3), Property::P2, 375));
    CHECK_THROWS_AS(p2_prime_power_witness(2, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("p1_theorem_witness") {
    CHECK(p1_theorem_witness(2) == W({{1, 2}}));
    CHECK(p1_theorem_witness(4) == W({{1, 2}, {2, 1}}));
    CHECK(p1_theorem_witness(6) == W({{3, 2}}));
    CHECK(p1_theorem_witness(8) == W({{4, 2}}));
    CHECK(p1_theorem_witness(25) == W({{5, 5}}));
    CHECK_THROWS_AS(p1_theorem_witness(9), std::domain_error);
    CHECK_THROWS_AS(p1_theorem_witness(11), std::domain_error);
    for (std::uint64_t m = 2; m <= 400; ++m) {
        if (!decide_p1_theorem(m)) CHECK(is_valid_certificate(p1_theorem_witness(m), Property::P1, m));
    }
}

TEST_CASE("brute_force_property") {
    CHECK(brute_force_property(Property::P1, 5).holds);
    const auto p1_4 = brute_force_property(Property::P1, 4);
    CHECK_FALSE(p1_4.holds);
    REQUIRE(p1_4.witness_poly);
    CHECK(violates_property(*p1_4.witness_poly, Property::P1, 4));
    CHECK(p1_4.witness == W({{1, 2}, {2, 1}}));
    const auto p2_6 = brute_force_property(Property::P2, 6);
    CHECK_FALSE(p2_6.holds);
    REQUIRE(p2_6.witness_poly);
    CHECK(poly_order(*p2_6.witness_poly).value == 6);
    CHECK_THROWS_AS(brute_force_property(Property::P1, 13), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_property(Property::P2, 1), std::invalid_argument);
}

TEST_CASE("brute force agrees with partition search for 2 <= m <= 10") {
    for (std::uint64_t m = 2; m <= 10; ++m) {
        CHECK(brute_force_property(Property::P1, m).holds == decide_p1_search(m).holds);
        CHECK(brute_force_property(Property::P2, m).holds == decide_p2_search(m).holds);
    }
}

TEST_CASE("P2 search over 2..500: soundness, corollary agreement, prime powers") {
    std::vector<bool> holds(501, false);
    for (std::uint64_t m = 2; m <= 500; ++m) {
        const auto v = decide_p2_search(m);
        holds[m] = v.holds;
        if (v.holds) CHECK_MESSAGE(decide_p2_necessary(m), "m = " << m);
        if (is_prime_power(m)) CHECK_MESSAGE(v.holds, "m = " << m);
        const auto c = decide_p2_corollary(m);
        if (c != CorollaryVerdict::Unknown) CHECK_MESSAGE((c == CorollaryVerdict::Holds) == v.holds, "m = " << m);
        if (!v.holds) CHECK(is_valid_certificate(*v.witness, Property::P2, m));
    }
    // Holds at p^i q carries down to every p^j q with 1 <= j <= i
    for (std::uint64_t m = 2; m <= 500; ++m) {
        const auto primes = prime_factors(m);
        if (primes.size() != 2 || !decide_p2_necessary(m) || !holds[m]) continue;
        const std::uint64_t q = primes[1];
        for (std::uint64_t lower = m / q / primes[0]; lower >= 1 && lower % primes[0] == 0; lower /= primes[0]) {
            CHECK_MESSAGE(holds[lower * q], "m = " << m << " lower = " << lower * q);
        }
        if (m / q != primes[0]) CHECK(holds[primes[0] * q]);
    }
}

TEST_CASE("materialized search witnesses violate their property, m <= 40") {
    for (std::uint64_t m = 2; m <= 40; ++m) {
        for (auto prop : {Property::P1, Property::P2}) {
            auto v = prop == Property::P1 ? decide_p1_search(m) : decide_p2_search(m);
            if (!v.holds) check_materialized(v);
        }
    }
}

TEST_CASE("classify by method") {
    auto v = classify(Property::P1, 9, Method::Theorem);
    CHECK(v.holds);
    CHECK(v.method == Method::Theorem);
    v = classify(Property::P1, 12, Method::Theorem);
    CHECK_FALSE(v.holds);
    check_materialized(v);

    v = classify(Property::P2, 18, Method::Theorem);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == W({{3, 1}, {6, 1}, {9, 1}}));
    check_materialized(v);

    v = classify(Property::P2, 30, Method::Corollary);
    CHECK_FALSE(v.holds);
    check_materialized(v);

    v = classify(Property::P2, 24, Method::Corollary);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == W({{1, 2}, {3, 2}, {8, 2}}));
    check_materialized(v);

    v = classify(Property::P2, 10, Method::Corollary);
    CHECK(v.holds);
    CHECK(v.method == Method::Corollary);

    // p^i q shapes are outside what the theorem alone decides
    CHECK(classify(Property::P2, 10, Method::Theorem).method == Method::Search);
    CHECK(classify(Property::P2, 6, Method::Brute).method == Method::Brute);
}

TEST_CASE("classify agrees across methods for m <= 200") {
    for (std::uint64_t m = 2; m <= 200; ++m) {
        const bool p1 = decide_p1_search(m).holds;
        const bool p2 = decide_p2_search(m).holds;
        for (auto method : {Method::Theorem, Method::Corollary}) {
            const auto v1 = classify(Property::P1, m, method);
            const auto v2 = classify(Property::P2, m, method);
            CHECK(v1.holds == p1);
            CHECK(v2.holds == p2);
            if (!v1.holds) CHECK(is_valid_certificate(*v1.witness, Property::P1, m));
            if (!v2.holds) CHECK_MESSAGE(is_valid_certificate(*v2.witness, Property::P2, m), "m = " << m);
        }
    }
}

TEST_CASE("scan output does not depend on the thread count") {
    const auto serial = scan(Property::P2, 2, 150, Method::Search, 1);
    const auto parallel = scan(Property::P2, 2, 150, Method::Search, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].m == 2 + k);
        CHECK(serial[k].m == parallel[k].m);
        CHECK(serial[k].holds == parallel[k].holds);
        CHECK(serial[k].witness == parallel[k].witness);
    }
    CHECK_THROWS_AS(scan(Property::P1, 10, 5, Method::Search, 1), std::invalid_argument);
}

TEST_CASE("certificate validation rejects malformed partitions") {
    CHECK(is_valid_certificate(W({{1, 2}}), Property::P1, 2));
    CHECK_FALSE(is_valid_certificate(W({{2, 1}}), Property::P1, 2));          // single factor
    CHECK_FALSE(is_valid_certificate(W({{1, 3}}), Property::P1, 3));          // N(1) = 2
    CHECK_FALSE(is_valid_certificate(W({{1, 2}, {2, 1}}), Property::P2, 4));  // lcm 2
    CHECK_FALSE(is_valid_certificate(W({{2, 1}, {1, 2}}), Property::P1, 4));  // unsorted
    CHECK_FALSE(is_valid_certificate(W({}), Property::P1, 2));
}
