#include "gf2q/selfcheck.hpp"

#include <functional>

#include "gf2q/berlekamp.hpp"
#include "gf2q/irreducible.hpp"
#include "gf2q/properties.hpp"

namespace gf2q {

namespace {

// Every polynomial of degree 1..max_degree, ascending.
void for_each_poly(std::size_t max_degree, const std::function<bool(const Poly&)>& body) {
    for (Word bits = 2; bits < (Word{1} << (max_degree + 1)); ++bits) {
        if (!body(Poly::from_word(bits))) return;
    }
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
    try {
        std::string failure = body();
        return {std::move(name), failure.empty(), std::move(failure)};
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
    std::vector<CheckResult> results;

    results.push_back(check("P1 search matches odd-prime-or-9 rule, m <= 300", [] {
        for (std::uint64_t m = 2; m <= 300; ++m) {
            if (decide_p1_search(m).holds != decide_p1_theorem(m)) return "m = " + std::to_string(m);
        }
        return std::string();
    }));

    results.push_back(check("brute force matches partition search, m <= 8", [] {
        for (std::uint64_t m = 2; m <= 8; ++m) {
            if (brute_force_property(Property::P1, m).holds != decide_p1_search(m).holds) return "P1 m = " + std::to_string(m);
            if (brute_force_property(Property::P2, m).holds != decide_p2_search(m).holds) return "P2 m = " + std::to_string(m);
        }
        return std::string();
    }));

    results.push_back(check("Q^m = I iff f | x^(2^m) - x, deg <= 8", [] {
        std::string failure;
        for_each_poly(8, [&](const Poly& f) {
            if (q_power_degree_is_identity(f) != divides_x2m_minus_x(f)) failure = format(f);
            return failure.empty();
        });
        return failure;
    }));

    results.push_back(check("Q invertible iff f squarefree, deg <= 8", [] {
        std::string failure;
        for_each_poly(8, [&](const Poly& f) {
            if (q_is_invertible(f) != is_squarefree(f)) failure = format(f);
            return failure.empty();
        });
        return failure;
    }));

    results.push_back(check("order = lcm of factor degrees = matrix order, deg <= 8", [] {
        std::string failure;
        for_each_poly(8, [&](const Poly& f) {
            if (!is_squarefree(f)) return true;
            const auto order = poly_order(f).value;
            if (order != multiplicative_order(build_q(f), lcm_up_to(f.deg()))) failure = format(f);
            return failure.empty();
        });
        return failure;
    }));

    results.push_back(check("factorization multiplies back to irreducibles, deg <= 9", [] {
        std::string failure;
        for_each_poly(9, [&](const Poly& f) {
            const Factorization fac = factor(f);
            bool ok = fac.product() == f;
            for (const auto& fp : fac.factors) ok = ok && is_irreducible(fp.poly);
            if (!ok) failure = format(f);
            return ok;
        });
        return failure;
    }));

    results.push_back(check("N(l) matches enumeration, l <= 10", [] {
        for (std::uint64_t l = 1; l <= 10; ++l) {
            std::uint64_t found = 0;
            for (Word bits = Word{1} << l; bits < (Word{1} << (l + 1)); ++bits) found += is_irreducible(Poly::from_word(bits));
            if (count_irreducible(l).count != found) return "l = " + std::to_string(l);
        }
        return std::string();
    }));

    results.push_back(check("corollary verdicts agree with search, m <= 150", [] {
        for (std::uint64_t m = 2; m <= 150; ++m) {
            const auto c = decide_p2_corollary(m);
            if (c == CorollaryVerdict::Unknown) continue;
            if ((c == CorollaryVerdict::Holds) != decide_p2_search(m).holds) return "m = " + std::to_string(m);
        }
        return std::string();
    }));

    results.push_back(check("squarefree (x^2+x+1)(x^3+x+1) has Q^5 != I", [] {
        const Poly f = parse("x^2+x+1") * parse("x^3+x+1");
        if (!is_squarefree(f) || q_power_degree_is_identity(f) || !q_is_invertible(f)) return format(f);
        return std::string();
    }));

    return results;
}

}  // namespace gf2q
