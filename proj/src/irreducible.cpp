#include "gf2q/irreducible.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gf2q {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        primes.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius is defined for n >= 1");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < Degree(1)) throw std::domain_error("irreducibility test needs degree >= 1, got " + format(f));
    const std::size_t m = f.deg();
    std::vector<std::size_t> checkpoints;
    for (auto r : prime_factors(m)) checkpoints.push_back(m / r);
    std::sort(checkpoints.begin(), checkpoints.end());

    const Poly x = rem(Poly::x(), f);
    Poly power = x;  // x^(2^k) mod f
    auto next = checkpoints.begin();
    for (std::size_t k = 1; k <= m; ++k) {
        power = square_mod(power, f);
        if (next != checkpoints.end() && *next == k) {
            if (!gcd(power + x, f).is_one()) return false;
            ++next;
        }
    }
    return power == x;
}

IrreducibleCount count_irreducible(std::uint64_t degree) {
    if (degree == 0) throw std::invalid_argument("irreducible count needs degree >= 1");
    BigInt sum = 0;
    for (auto d : divisors(degree)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        BigInt term = BigInt(1) << static_cast<unsigned>(degree / d);
        if (mu > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return {degree, sum / degree};
}

std::uint64_t count_at_most(std::uint64_t degree, std::uint64_t cap) {
    if (degree == 0) throw std::invalid_argument("irreducible count needs degree >= 1");
    if (degree <= 62) {
        std::int64_t sum = 0;
        for (auto d : divisors(degree)) sum += mobius(d) * (std::int64_t{1} << (degree / d));
        return std::min<std::uint64_t>(static_cast<std::uint64_t>(sum) / degree, cap);
    }
    // N(l) >= 2^(l-1)/l, which exceeds every 64-bit cap from here on
    if (degree >= 128) return cap;
    const BigInt exact = count_irreducible(degree).count;
    return exact >= cap ? cap : exact.convert_to<std::uint64_t>();
}

namespace {

// Irreducibles of degree 2..8, used to discard candidates cheaply before
// running the full test.
const std::vector<Poly>& small_irreducibles() {
    static const std::vector<Poly> table = [] {
        std::vector<Poly> t;
        for (Word v = 4; v < 512; ++v) {
            Poly p = Poly::from_word(v);
            if (is_irreducible(p)) t.push_back(std::move(p));
        }
        return t;
    }();
    return table;
}

bool has_small_factor(const Poly& f) {
    return std::any_of(small_irreducibles().begin(), small_irreducibles().end(),
                       [&](const Poly& g) { return rem(f, g).is_zero(); });
}

}  // namespace

std::vector<Poly> first_k_irreducibles(std::uint64_t degree, std::uint64_t k) {
    if (degree == 0) throw std::invalid_argument("irreducible enumeration needs degree >= 1");
    if (count_at_most(degree, k) < k) {
        throw std::domain_error("requested " + std::to_string(k) + " irreducibles of degree " +
                                std::to_string(degree) + " but N(" + std::to_string(degree) +
                                ") = " + count_irreducible(degree).count.str());
    }
    std::vector<Poly> out;
    out.reserve(k);
    if (degree == 1) {
        for (Word v = 2; v < 4 && out.size() < k; ++v) out.push_back(Poly::from_word(v));
        return out;
    }
    // Beyond degree 1 an irreducible has constant term 1 (not divisible by x)
    // and an odd number of terms (not divisible by x + 1).
    const Poly start = Poly::monomial(degree) + Poly::one();
    for (Poly f = start; out.size() < k; f = successor(successor(f))) {
        if (f.popcount() % 2 == 0) continue;
        if (degree > 8 && has_small_factor(f)) continue;
        if (is_irreducible(f)) out.push_back(f);
    }
    return out;
}

}  // namespace gf2q
