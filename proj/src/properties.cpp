#include "gf2q/properties.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "gf2q/berlekamp.hpp"
#include "gf2q/irreducible.hpp"

namespace gf2q {

std::string to_string(Property p) { return p == Property::P1 ? "P1" : "P2"; }

std::string to_string(Method m) {
    switch (m) {
        case Method::Search: return "search";
        case Method::Theorem: return "theorem";
        case Method::Corollary: return "corollary";
        case Method::Brute: return "brute";
    }
    return "?";
}

std::string to_string(CorollaryVerdict v) {
    switch (v) {
        case CorollaryVerdict::Holds: return "holds";
        case CorollaryVerdict::Fails: return "fails";
        case CorollaryVerdict::Unknown: return "unknown";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// DegreePartition

std::uint64_t DegreePartition::total_degree() const {
    std::uint64_t s = 0;
    for (const auto& p : parts) s += p.degree * p.count;
    return s;
}

std::uint64_t DegreePartition::factor_count() const {
    std::uint64_t s = 0;
    for (const auto& p : parts) s += p.count;
    return s;
}

std::uint64_t DegreePartition::degree_lcm() const {
    std::uint64_t l = 1;
    for (const auto& p : parts) l = lcm_checked(l, p.degree);
    return l;
}

std::string DegreePartition::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) s += ", ";
        s += std::to_string(parts[k].degree) + ":" + std::to_string(parts[k].count);
    }
    return s + "}";
}

namespace {

void require_degree(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("property decisions need m >= 2, got " + std::to_string(m));
}

DegreePartition make_partition(std::map<std::uint64_t, std::uint64_t> counts) {
    DegreePartition w;
    for (const auto& [d, c] : counts) {
        if (c) w.parts.push_back({d, c});
    }
    return w;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

// m = p^i * q^j, with p < q the two distinct primes of m.
struct TwoPrimeShape {
    std::uint64_t p, i, q, j;
};

std::optional<TwoPrimeShape> two_prime_shape(std::uint64_t m) {
    const auto primes = prime_factors(m);
    if (primes.size() != 2) return std::nullopt;
    TwoPrimeShape s{primes[0], 0, primes[1], 0};
    while (m % s.p == 0) m /= s.p, ++s.i;
    while (m % s.q == 0) m /= s.q, ++s.j;
    return s;
}

}  // namespace

bool is_valid_certificate(const DegreePartition& w, Property prop, std::uint64_t m) {
    if (w.parts.empty()) return false;
    for (std::size_t k = 0; k < w.parts.size(); ++k) {
        const Part& part = w.parts[k];
        if (part.degree == 0 || part.count == 0) return false;
        if (k && w.parts[k - 1].degree >= part.degree) return false;
        if (m % part.degree) return false;
        if (count_at_most(part.degree, part.count) < part.count) return false;
    }
    if (w.total_degree() != m || w.factor_count() < 2) return false;
    return prop == Property::P1 || w.degree_lcm() == m;
}

bool violates_property(const Poly& f, Property prop, std::uint64_t m) {
    if (f.degree() != Degree(m) || is_irreducible(f)) return false;
    if (prop == Property::P1) return divides_x2m_minus_x(f);
    return is_squarefree(f) && poly_order(f).value == m;
}

// ---------------------------------------------------------------------------
// Partition search

namespace {

// Depth-first over the divisors of m in ascending order. At each divisor the
// counts 1..cap are tried before skipping it, so the first complete
// partition reached is the lexicographically smallest. Dead states are
// memoised on (divisor index, remaining degree, lcm so far, factors so far).
class PartitionSearch {
   public:
    PartitionSearch(std::uint64_t m, bool need_full_lcm) : m_(m), need_lcm_(need_full_lcm), divisors_(divisors(m)) {
        if (m >= (std::uint64_t{1} << 32)) throw std::out_of_range("partition search supports m < 2^32");
        caps_.reserve(divisors_.size());
        for (auto d : divisors_) caps_.push_back(count_at_most(d, m / d));
    }

    std::optional<DegreePartition> smallest() {
        if (!feasible(0, m_, 0, 0)) return std::nullopt;
        std::map<std::uint64_t, std::uint64_t> chosen;
        std::size_t i = 0;
        std::uint64_t remaining = m_;
        std::size_t lcm_idx = 0;
        std::uint64_t factors = 0;
        for (; remaining; ++i) {
            const std::uint64_t d = divisors_[i];
            for (std::uint64_t c = 1; c <= std::min(caps_[i], remaining / d); ++c) {
                const std::size_t next_lcm = lcm_index(lcm_idx, d);
                const std::uint64_t next_factors = std::min<std::uint64_t>(2, factors + c);
                if (feasible(i + 1, remaining - c * d, next_lcm, next_factors)) {
                    chosen[d] = c;
                    remaining -= c * d;
                    lcm_idx = next_lcm;
                    factors = next_factors;
                    break;
                }
            }
        }
        return make_partition(std::move(chosen));
    }

   private:
    std::size_t lcm_index(std::size_t idx, std::uint64_t d) const {
        if (!need_lcm_) return 0;
        const std::uint64_t l = lcm_checked(divisors_[idx], d);
        return static_cast<std::size_t>(std::lower_bound(divisors_.begin(), divisors_.end(), l) - divisors_.begin());
    }

    bool feasible(std::size_t i, std::uint64_t remaining, std::size_t lcm_idx, std::uint64_t factors) {
        if (remaining == 0) return factors >= 2 && (!need_lcm_ || divisors_[lcm_idx] == m_);
        if (i == divisors_.size() || divisors_[i] > remaining) return false;
        const std::uint64_t key = (static_cast<std::uint64_t>(i) << 48) ^ (static_cast<std::uint64_t>(lcm_idx) << 34) ^
                                  (factors << 32) ^ remaining;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const std::uint64_t d = divisors_[i];
        bool ok = false;
        for (std::uint64_t c = 1; !ok && c <= std::min(caps_[i], remaining / d); ++c) {
            ok = feasible(i + 1, remaining - c * d, lcm_index(lcm_idx, d), std::min<std::uint64_t>(2, factors + c));
        }
        if (!ok) ok = feasible(i + 1, remaining, lcm_idx, factors);
        memo_.emplace(key, ok);
        return ok;
    }

    std::uint64_t m_;
    bool need_lcm_;
    std::vector<std::uint64_t> divisors_;
    std::vector<std::uint64_t> caps_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

PropertyVerdict search_verdict(Property prop, std::uint64_t m) {
    require_degree(m);
    PropertyVerdict v;
    v.property = prop;
    v.m = m;
    v.method = Method::Search;
    v.witness = PartitionSearch(m, prop == Property::P2).smallest();
    v.holds = !v.witness.has_value();
    return v;
}

}  // namespace

PropertyVerdict decide_p1_search(std::uint64_t m) { return search_verdict(Property::P1, m); }

PropertyVerdict decide_p2_search(std::uint64_t m) { return search_verdict(Property::P2, m); }

// ---------------------------------------------------------------------------
// Theorem-level rules

bool decide_p1_theorem(std::uint64_t m) {
    require_degree(m);
    return m == 9 || (m % 2 == 1 && is_prime(m));
}

bool decide_p2_necessary(std::uint64_t m) {
    require_degree(m);
    const auto primes = prime_factors(m);
    if (primes.size() == 1) return true;
    const auto shape = two_prime_shape(m);
    return shape && shape->j == 1;
}

namespace {

// 2^e as a big integer; the corollary inequalities outgrow 64 bits quickly.
BigInt pow2(std::uint64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

bool pigeonhole_large_q_applies(std::uint64_t p, std::uint64_t i, std::uint64_t q) {
    const std::uint64_t pi = pow_u64(p, i);
    if (!(q > pi && pi > 2)) return false;
    return BigInt(pi - 2) * q <= pow2(pi) - pow2(pow_u64(p, i - 1)) + 1;
}

bool pigeonhole_small_q_applies(std::uint64_t p, std::uint64_t i, std::uint64_t q) {
    const std::uint64_t pi = pow_u64(p, i);
    if (!(q < pi)) return false;
    return BigInt(q - 2) * pi <= pow2(q);
}

}  // namespace

CorollaryVerdict decide_p2_corollary(std::uint64_t m) {
    require_degree(m);
    if (prime_factors(m).size() == 1) return CorollaryVerdict::Holds;
    if (!decide_p2_necessary(m)) return CorollaryVerdict::Fails;
    const auto [p, i, q, j] = *two_prime_shape(m);
    const std::uint64_t pi = pow_u64(p, i);
    if (BigInt(q) > pow2(pi)) return CorollaryVerdict::Holds;
    if (pi == 2) return q > 4 ? CorollaryVerdict::Holds : CorollaryVerdict::Fails;
    if (pigeonhole_large_q_applies(p, i, q) || pigeonhole_small_q_applies(p, i, q)) return CorollaryVerdict::Fails;
    return CorollaryVerdict::Unknown;
}

// ---------------------------------------------------------------------------
// Witness constructions

DegreePartition p1_theorem_witness(std::uint64_t m) {
    require_degree(m);
    if (decide_p1_theorem(m)) throw std::domain_error("P1 holds for m = " + std::to_string(m) + ": no witness");
    if (m == 2) return make_partition({{1, 2}});
    if (m == 4) return make_partition({{1, 2}, {2, 1}});
    const std::uint64_t n = prime_factors(m).front();
    DegreePartition w = make_partition({{m / n, n}});
    if (!is_valid_certificate(w, Property::P1, m)) {
        throw std::logic_error("P1 witness " + w.to_string() + " is not a certificate for m = " + std::to_string(m));
    }
    return w;
}

DegreePartition p2_prime_power_witness(std::uint64_t p, std::uint64_t i, std::uint64_t q, std::uint64_t j) {
    if (!is_prime(p) || !is_prime(q) || p >= q || i < 1 || j < 2) {
        throw std::invalid_argument("prime-power witness needs primes p < q, i >= 1, j >= 2");
    }
    const std::uint64_t m = pow_u64(p, i) * pow_u64(q, j);
    DegreePartition w = make_partition({
        {pow_u64(p, i - 1) * pow_u64(q, j), p - 1},
        {pow_u64(p, i) * pow_u64(q, j - 1), 1},
        {pow_u64(p, i - 1) * pow_u64(q, j - 1), q - p},
    });
    if (!is_valid_certificate(w, Property::P2, m)) {
        throw std::logic_error("P2 witness " + w.to_string() + " is not a certificate for m = " + std::to_string(m));
    }
    return w;
}

DegreePartition construct_pigeonhole_witness(std::uint64_t p, std::uint64_t i, std::uint64_t q) {
    if (!is_prime(p) || !is_prime(q) || p >= q || i < 1) {
        throw std::invalid_argument("pigeonhole witness needs primes p < q and i >= 1");
    }
    const std::uint64_t pi = pow_u64(p, i);
    const std::uint64_t m = pi * q;
    if (pi == 2 && q == 3) {
        // no room for the residue scan at m = 6; x(x^2+x+1)(x^3+x+1)
        return make_partition({{1, 1}, {2, 1}, {3, 1}});
    }

    // `big` takes the role of p^i in the counting argument, `other` of q.
    std::uint64_t big, other, big_count_cap;
    if (pigeonhole_large_q_applies(p, i, q)) {
        big = pi;
        other = q;
        // N(p^i) = (2^(p^i) - 2^(p^(i-1))) / p^i
        const BigInt n_big = (pow2(pi) - pow2(pow_u64(p, i - 1))) / pi;
        big_count_cap = n_big > BigInt(m) ? m : n_big.convert_to<std::uint64_t>();
    } else if (pigeonhole_small_q_applies(p, i, q)) {
        big = q;
        other = pi;
        const BigInt n_q = (pow2(q) - 2) / q;
        big_count_cap = n_q > BigInt(m) ? m : n_q.convert_to<std::uint64_t>();
    } else {
        throw std::domain_error("corollary gives no witness here (m = " + std::to_string(m) + ")");
    }

    for (std::uint64_t u = 1; u + 2 <= big; ++u) {
        const std::uint64_t residue = (u * other) % big;
        if (residue != 1 && residue != 2) continue;
        const std::uint64_t l = (u * other - residue) / big;
        if (l == 0 || l > big_count_cap) {
            throw std::logic_error("pigeonhole count " + std::to_string(l) + " out of range for m = " + std::to_string(m));
        }
        DegreePartition w = make_partition({{1, residue}, {big, l}, {other, big - u}});
        if (!is_valid_certificate(w, Property::P2, m)) {
            throw std::logic_error("pigeonhole witness " + w.to_string() + " is not a certificate");
        }
        return w;
    }
    throw std::logic_error("no residue 1 or 2 found for m = " + std::to_string(m));
}

Poly materialize_witness(const DegreePartition& w) {
    Poly f = Poly::one();
    for (const auto& part : w.parts) {
        if (count_at_most(part.degree, part.count) < part.count) {
            throw std::domain_error("witness part " + std::to_string(part.degree) + ":" + std::to_string(part.count) +
                                    " exceeds N(" + std::to_string(part.degree) + ")");
        }
        for (const Poly& g : first_k_irreducibles(part.degree, part.count)) f = mul(f, g);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Brute force

PropertyVerdict brute_force_property(Property prop, std::uint64_t m) {
    if (m < 2 || m > 12) throw std::invalid_argument("brute force covers 2 <= m <= 12, got " + std::to_string(m));
    PropertyVerdict v;
    v.property = prop;
    v.m = m;
    v.method = Method::Brute;
    v.holds = true;
    for (Word bits = Word{1} << m; bits < (Word{1} << (m + 1)); ++bits) {
        const Poly f = Poly::from_word(bits);
        const bool irreducible = is_irreducible(f);
        bool lhs;
        if (prop == Property::P1) {
            lhs = q_power_degree_is_identity(f);
        } else {
            const BitMatrix q = build_q(f);
            lhs = rank(q) == m && multiplicative_order(q, lcm_up_to(m)) == m;
        }
        if (lhs == irreducible) continue;
        v.holds = false;
        v.witness_poly = f;
        std::map<std::uint64_t, std::uint64_t> degrees;
        for (const auto& fp : factor(f).factors) degrees[fp.poly.deg()] += fp.multiplicity;
        v.witness = make_partition(std::move(degrees));
        break;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

PropertyVerdict holds(Property prop, std::uint64_t m, Method method) {
    PropertyVerdict v;
    v.property = prop;
    v.m = m;
    v.method = method;
    return v;
}

PropertyVerdict fails(Property prop, std::uint64_t m, Method method, DegreePartition w) {
    PropertyVerdict v = holds(prop, m, method);
    v.holds = false;
    v.witness = std::move(w);
    return v;
}

// Witness for a degree outside the p^i / p^i q shapes.
DegreePartition shape_witness(std::uint64_t m) {
    if (auto s = two_prime_shape(m); s && s->j >= 2) return p2_prime_power_witness(s->p, s->i, s->q, s->j);
    // three or more coprime factors: the generic search always finds one
    return *decide_p2_search(m).witness;
}

PropertyVerdict classify_p1(std::uint64_t m, Method method) {
    switch (method) {
        case Method::Search: return decide_p1_search(m);
        case Method::Brute: return brute_force_property(Property::P1, m);
        case Method::Theorem:
        case Method::Corollary:
            if (decide_p1_theorem(m)) return holds(Property::P1, m, Method::Theorem);
            return fails(Property::P1, m, Method::Theorem, p1_theorem_witness(m));
    }
    throw std::logic_error("unhandled method");
}

PropertyVerdict classify_p2(std::uint64_t m, Method method) {
    switch (method) {
        case Method::Search: return decide_p2_search(m);
        case Method::Brute: return brute_force_property(Property::P2, m);
        case Method::Theorem:
            if (prime_factors(m).size() == 1) return holds(Property::P2, m, Method::Theorem);
            if (!decide_p2_necessary(m)) return fails(Property::P2, m, Method::Theorem, shape_witness(m));
            return decide_p2_search(m);
        case Method::Corollary: {
            switch (decide_p2_corollary(m)) {
                case CorollaryVerdict::Holds: return holds(Property::P2, m, Method::Corollary);
                case CorollaryVerdict::Unknown: return decide_p2_search(m);
                case CorollaryVerdict::Fails: break;
            }
            if (!decide_p2_necessary(m)) return fails(Property::P2, m, Method::Corollary, shape_witness(m));
            const auto [p, i, q, j] = *two_prime_shape(m);
            return fails(Property::P2, m, Method::Corollary, construct_pigeonhole_witness(p, i, q));
        }
    }
    throw std::logic_error("unhandled method");
}

}  // namespace

PropertyVerdict classify(Property prop, std::uint64_t m, Method method) {
    require_degree(m);
    return prop == Property::P1 ? classify_p1(m, method) : classify_p2(m, method);
}

std::vector<PropertyVerdict> scan(Property prop, std::uint64_t from, std::uint64_t to, Method method, unsigned jobs) {
    if (from < 2 || to < from) throw std::invalid_argument("scan range must satisfy 2 <= from <= to");
    const std::size_t count = static_cast<std::size_t>(to - from + 1);
    std::vector<std::optional<PropertyVerdict>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            try {
                slots[k] = classify(prop, from + k, method);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<PropertyVerdict> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (errors[k]) std::rethrow_exception(errors[k]);
        out.push_back(std::move(*slots[k]));
    }
    return out;
}

}  // namespace gf2q
