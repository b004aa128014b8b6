// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "gf2q/berlekamp.hpp"
#include "gf2q/irreducible.hpp"
#include "gf2q/properties.hpp"
#include "oracle.hpp"

using namespace gf2q;

namespace {

// Collects the first few mismatches so a failing line says why.
class Log {
public:
    void fail(const std::string& what) {
        if (failures_++ < 5) (first_.empty() ? first_ : first_.append("; ")).append(what);
    }
    bool expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
        return ok;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const { return first_ + (failures_ > 5 ? " ..." : ""); }

private:
    int failures_ = 0;
    std::string first_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------

void p1_classification(Log& log) {
    for (std::uint64_t m = 2; m <= 2000; ++m) {
        const bool expected = (m % 2 == 1 && is_prime(m)) || m == 9;
        const auto v = decide_p1_search(m);
        log.expect(v.holds == expected, "m=" + str(m));
        if (!v.holds) log.expect(v.witness && is_valid_certificate(*v.witness, Property::P1, m), "cert m=" + str(m));
    }
}

void polynomial_ground_truth(Log& log) {
    for (std::uint64_t m = 2; m <= 12; ++m) {
        for (auto prop : {Property::P1, Property::P2}) {
            const bool brute = brute_force_property(prop, m).holds;
            const bool search = (prop == Property::P1 ? decide_p1_search(m) : decide_p2_search(m)).holds;
            log.expect(brute == search, to_string(prop) + " m=" + str(m));
        }
        for (Word low = 0; low < (Word{1} << m); ++low) {
            const Word bits = (Word{1} << m) | low;
            const Poly f = Poly::from_word(bits);
            const bool power_is_identity = matpow(build_q(f), m) == identity(m);
            // x^(2^m) = x (mod f) by repeated squaring of plain integers
            const bool divides = oracle::x_pow_2k_mod(static_cast<int>(m), bits) == oracle::mod(2, bits);
            log.expect(power_is_identity == divides, "f=" + to_hex(f));
        }
    }
}

void order_is_lcm(Log& log) {
    std::mt19937_64 rng(20);
    const std::uint64_t bound = lcm_up_to(20);
    int done = 0;
    while (done < 10000) {
        const auto bits = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 20));
        if (!oracle::squarefree(bits)) continue;
        ++done;
        std::uint64_t expected = 1;
        for (auto g : oracle::factor(bits)) expected = std::lcm(expected, static_cast<std::uint64_t>(oracle::deg(g)));
        const Poly f = Poly::from_word(bits);
        const std::uint64_t order = poly_order(f).value;
        const std::uint64_t matrix_order = multiplicative_order(build_q(f), bound);
        log.expect(order == expected && matrix_order == expected, "f=" + to_hex(f));
    }
}

void p2_soundness(Log& log) {
    for (std::uint64_t m = 2; m <= 500; ++m) {
        const auto v = decide_p2_search(m);
        if (v.holds) log.expect(decide_p2_necessary(m), "m=" + str(m));
        else log.expect(v.witness && is_valid_certificate(*v.witness, Property::P2, m), "cert m=" + str(m));
    }
    for (std::uint64_t m : {18u, 30u}) {
        const auto v = decide_p2_search(m);
        if (!log.expect(!v.holds && v.witness, "m=" + str(m) + " holds")) continue;
        const Poly f = materialize_witness(*v.witness);
        log.expect(f.deg() == m && !is_irreducible(f) && is_squarefree(f), "shape m=" + str(m));
        log.expect(multiplicative_order(build_q(f), lcm_up_to(m)) == m, "order m=" + str(m));
    }
}

void corollary(Log& log) {
    for (std::uint64_t m = 2; m <= 500; ++m) {
        const auto c = decide_p2_corollary(m);
        if (c == CorollaryVerdict::Unknown) continue;
        log.expect((c == CorollaryVerdict::Holds) == decide_p2_search(m).holds, "m=" + str(m));
    }
    const auto six = classify(Property::P2, 6, Method::Corollary);
    log.expect(!six.holds && six.witness, "m=6 holds");
    if (six.witness) {
        const Poly f = materialize_witness(*six.witness);
        log.expect(f == parse("x") * parse("x^2+x+1") * parse("x^3+x+1"), "m=6 witness " + format(f));
        log.expect(poly_order(f).value == 6, "m=6 order");
    }
    log.expect(decide_p2_corollary(10) == CorollaryVerdict::Holds, "m=10");
    log.expect(decide_p2_corollary(33) == CorollaryVerdict::Holds, "m=33");
    log.expect(decide_p2_corollary(24) == CorollaryVerdict::Fails, "m=24");
    const auto w24 = construct_pigeonhole_witness(2, 3, 3);
    log.expect(is_valid_certificate(w24, Property::P2, 24), "m=24 witness");
    log.expect(poly_order(materialize_witness(w24)).value == 24, "m=24 order");
}

void counting(Log& log) {
    for (int l = 1; l <= 12; ++l) {
        log.expect(count_irreducible(l).count == oracle::count_by_enumeration(l), "enum l=" + str(l));
    }
    const int table[] = {2, 1, 2, 3};
    for (int l = 1; l <= 4; ++l) log.expect(count_irreducible(l).count == table[l - 1], "table l=" + str(l));
    for (std::uint64_t l = 2; l <= 64; ++l) {
        const BigInt n = count_irreducible(l).count;
        log.expect(n >= l - 1, "l-1 l=" + str(l));
        if (l > 4) log.expect(n >= l, "l l=" + str(l));
    }
    log.expect(count_irreducible(9).count == 56, "N(9)");
    log.expect(BigInt(512 - 8) / 9 == 56, "prime power formula");
}

Poly random_poly(std::mt19937_64& rng, std::size_t degree) {
    std::vector<Word> w(degree / kWordBits + 1);
    for (auto& x : w) x = rng();
    const std::size_t top = degree % kWordBits;
    if (top != 63) w.back() &= (Word{2} << top) - 1;
    w.back() |= Word{1} << top;
    return Poly::from_words(std::move(w));
}

void factor_round_trip(Log& log) {
    std::mt19937_64 rng(70);
    int squarefree_seen = 0;
    for (int t = 0; t < 10000; ++t) {
        Poly f;
        if (t % 4 == 0) {
            // forced square: g^2 * h with deg <= 64
            const std::size_t dg = 1 + rng() % 16;
            const std::size_t dh = rng() % (65 - 2 * dg);
            f = square(random_poly(rng, dg)) * random_poly(rng, dh);
        } else {
            f = random_poly(rng, 1 + rng() % 64);
        }
        const Factorization fac = factor(f);
        bool ok = fac.product() == f;
        for (std::size_t k = 0; k < fac.factors.size(); ++k) {
            ok = ok && is_irreducible(fac.factors[k].poly);
            if (k) ok = ok && fac.factors[k - 1].poly != fac.factors[k].poly;
        }
        log.expect(ok, "factor " + to_hex(f));
        if (t % 4 == 0) log.expect(!fac.is_squarefree(), "forced square " + to_hex(f));
        if (ok && fac.is_squarefree()) {
            ++squarefree_seen;
            log.expect(berlekamp_nullity(f) == fac.factors.size(), "nullity " + to_hex(f));
        }
    }
    log.expect(squarefree_seen > 1000, "too few squarefree samples");
}

void squarefree_is_not_enough(Log& log) {
    const Poly f = parse("x^2+x+1") * parse("x^3+x+1");
    const BitMatrix q = build_q(f);
    log.expect(is_squarefree(f), "squarefree");
    log.expect(matpow(q, 5) != identity(5), "Q^5 = I");
    log.expect(!divides_x2m_minus_x(f), "divides");
    // what squarefreeness does buy: Q invertible and a defined order
    log.expect(rank(q) == 5 && q_is_invertible(f), "invertible");
    log.expect(poly_order(f).value == 6 && matpow(q, 6) == identity(5), "order 6");
    // the corrected predicates over every polynomial of degree <= 10
    for (Word bits = 2; bits < (Word{1} << 11); ++bits) {
        const Poly g = Poly::from_word(bits);
        log.expect(q_is_invertible(g) == oracle::squarefree(bits), "invertible " + to_hex(g));
        log.expect(q_power_degree_is_identity(g) == divides_x2m_minus_x(g), "identity " + to_hex(g));
    }
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<void(Log&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"P1 holds exactly for odd primes and 9, m <= 2000", 5, p1_classification},
        {"brute force matches search, Q^m = I iff f | x^(2^m) - x, m <= 12", 60, polynomial_ground_truth},
        {"order = lcm of factor degrees = matrix order, 10^4 samples", 30, order_is_lcm},
        {"P2 holds only for p^i and p^i q, witnesses at 18 and 30", 60, p2_soundness},
        {"corollary verdicts agree with search, m <= 500", 60, corollary},
        {"irreducible counts and bounds", 30, counting},
        {"factorization round trip and nullity, 10^4 samples", 60, factor_round_trip},
        {"squarefree f with Q^m != I", 30, squarefree_is_not_enough},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Log log;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(log);
        } catch (const std::exception& e) {
            log.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            std::ostringstream s;
            s << "over budget of " << c.budget_seconds << "s";
            log.fail(s.str());
        }
        std::printf("%s [%d] %s (%.2fs)%s%s\n", log.ok() ? "PASS" : "FAIL", index, c.name, seconds,
                    log.ok() ? "" : ": ", log.summary().c_str());
        failed += !log.ok();
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
