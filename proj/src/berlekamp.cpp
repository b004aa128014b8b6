#include "gf2q/berlekamp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gf2q {

// ---------------------------------------------------------------------------
// integers

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
    while (b) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t q = a / gcd_u64(a, b);
    if (q > std::numeric_limits<std::uint64_t>::max() / b) {
        throw std::overflow_error("lcm(" + std::to_string(a) + ", " + std::to_string(b) + ") overflows 64 bits");
    }
    return q * b;
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& values) {
    std::uint64_t l = 1;
    for (auto v : values) l = lcm_checked(l, v);
    return l;
}

std::uint64_t lcm_up_to(std::uint64_t n) {
    std::uint64_t l = 1;
    for (std::uint64_t k = 2; k <= n; ++k) l = lcm_checked(l, k);
    return l;
}

// ---------------------------------------------------------------------------
// Factorization

Poly Factorization::product() const {
    Poly p = Poly::one();
    for (const auto& [poly, mult] : factors) p = mul(p, pow(poly, mult));
    return p;
}

bool Factorization::is_squarefree() const noexcept {
    return std::all_of(factors.begin(), factors.end(), [](const FactorPower& fp) { return fp.multiplicity == 1; });
}

// ---------------------------------------------------------------------------
// Q matrix

namespace {

void require_nonconstant(const Poly& f, const char* what) {
    if (f.degree() < Degree(1)) {
        throw std::domain_error(std::string(what) + " requires a polynomial of degree >= 1, got " + format(f));
    }
}

}  // namespace

BitMatrix build_q(const Poly& f, std::size_t max_degree) {
    require_nonconstant(f, "Q-matrix");
    const std::size_t m = f.deg();
    if (m > max_degree) {
        throw std::length_error("degree " + std::to_string(m) + " exceeds the Q-matrix cap of " +
                                std::to_string(max_degree));
    }
    BitMatrix q(m);
    const Poly x2 = Poly::monomial(2);
    Poly power = rem(Poly::one(), f);  // x^(2i) mod f, starting at i = 0
    for (std::size_t i = 0; i < m; ++i) {
        q.set_row(i, power.words());
        if (i + 1 < m) power = rem(mul(power, x2), f);
    }
    return q;
}

Poly frobenius_apply(const BitMatrix& q, const Poly& a, const Poly& f) {
    require_nonconstant(f, "Frobenius map");
    if (q.size() != f.deg()) throw std::invalid_argument("Q-matrix dimension does not match deg f");
    if (!(a.degree() < f.degree())) throw std::domain_error("operand degree must be below deg f");
    BitVector v(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (a.coeff(j)) v.set(j);
    }
    return Poly::from_bits(vecmul(v, q).words());
}

bool divides_x2m_minus_x(const Poly& f) {
    require_nonconstant(f, "x^(2^m) - x divisibility");
    return pow2k_mod(f.deg(), f) == rem(Poly::x(), f);
}

bool q_power_degree_is_identity(const Poly& f, std::size_t max_degree) {
    const BitMatrix q = build_q(f, max_degree);
    return matpow(q, q.size()) == identity(q.size());
}

bool q_is_invertible(const Poly& f, std::size_t max_degree) {
    const BitMatrix q = build_q(f, max_degree);
    return rank(q) == q.size();
}

std::size_t berlekamp_nullity(const Poly& f, std::size_t max_degree) {
    const BitMatrix q = build_q(f, max_degree);
    return nullspace(matadd(q, identity(q.size()))).size();
}

// ---------------------------------------------------------------------------
// Squarefree decomposition

namespace {

// Appends the parts of f, each exponent scaled by `scale`.
void squarefree_parts(const Poly& f, std::uint64_t scale, std::vector<FactorPower>& out) {
    if (f.degree() < Degree(1)) return;
    const Poly d = derivative(f);
    if (d.is_zero()) {
        // f(x) = g(x)^2 with g read off the even-position coefficients
        squarefree_parts(sqrt_of_square(f), scale * 2, out);
        return;
    }
    // Yun-style peeling of the multiplicities not divisible by 2.
    Poly c = gcd(f, d);
    Poly w = div_exact(f, c);
    for (std::uint64_t i = 1; !w.is_one(); ++i) {
        const Poly y = gcd(w, c);
        const Poly z = div_exact(w, y);
        if (!z.is_one()) out.push_back({z, i * scale});
        w = y;
        c = div_exact(c, y);
    }
    // what is left in c has only even multiplicities
    if (!c.is_one()) squarefree_parts(sqrt_of_square(c), scale * 2, out);
}

// Berlekamp splitting of a squarefree g into its distinct irreducible factors.
std::vector<Poly> berlekamp_split(const Poly& g, std::size_t max_degree) {
    if (g.deg() == 1) return {g};
    const BitMatrix q = build_q(g, max_degree);
    const std::vector<BitVector> basis = nullspace(matadd(q, identity(q.size())));
    const std::size_t r = basis.size();
    std::vector<Poly> parts{g};
    if (r == 1) return parts;

    for (const BitVector& v : basis) {
        const Poly vp = Poly::from_bits(v.words());
        if (vp.degree() < Degree(1)) continue;  // the constant solution never splits
        const Poly vp1 = vp + Poly::one();
        const std::size_t count = parts.size();
        for (std::size_t k = 0; k < count && parts.size() < r; ++k) {
            if (parts[k].deg() == 1) continue;
            // g | v(v+1), so the two gcds are coprime and multiply to parts[k]
            Poly d0 = gcd(parts[k], vp);
            if (d0.degree() < Degree(1) || d0 == parts[k]) continue;
            Poly d1 = gcd(parts[k], vp1);
            parts[k] = std::move(d0);
            parts.push_back(std::move(d1));
        }
        if (parts.size() == r) return parts;
    }
    throw std::logic_error("Berlekamp split of " + format(g) + " stopped at " + std::to_string(parts.size()) +
                           " of " + std::to_string(r) + " factors");
}

}  // namespace

std::vector<FactorPower> squarefree_decompose(const Poly& f) {
    require_nonconstant(f, "squarefree decomposition");
    std::vector<FactorPower> out;
    squarefree_parts(f, 1, out);
    std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

Factorization factor(const Poly& f, std::size_t max_degree) {
    require_nonconstant(f, "factorization");
    if (f.deg() > max_degree) {
        throw std::length_error("degree " + std::to_string(f.deg()) + " exceeds the Q-matrix cap of " +
                                std::to_string(max_degree));
    }
    Factorization fac;
    for (const auto& [part, exponent] : squarefree_decompose(f)) {
        for (Poly& p : berlekamp_split(part, max_degree)) fac.factors.push_back({std::move(p), exponent});
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.poly < b.poly; });
    return fac;
}

std::optional<PolyOrder> order_of(const Factorization& fac) {
    if (!fac.is_squarefree()) return std::nullopt;
    std::uint64_t l = 1;
    for (const auto& fp : fac.factors) l = lcm_checked(l, fp.poly.deg());
    return PolyOrder{l};
}

PolyOrder poly_order(const Poly& f, std::size_t max_degree) {
    require_nonconstant(f, "order");
    if (!is_squarefree(f)) {
        throw std::domain_error("order undefined: " + format(f) + " has a repeated factor, so Q is singular");
    }
    return *order_of(factor(f, max_degree));
}

}  // namespace gf2q
