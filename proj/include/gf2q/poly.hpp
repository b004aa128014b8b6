// Polynomials over GF(2) stored as little-endian packed bit-vectors.
//
// Bit j of the vector is the coefficient of x^j. Every Poly is kept in
// canonical form: the last stored word is nonzero, so the zero polynomial
// has no words at all and two equal polynomials have identical storage.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2q {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which orders below every natural number and has no numeric value.
class Degree {
   public:
    static constexpr Degree minus_infinity() noexcept { return Degree(); }
    constexpr explicit Degree(std::size_t d) noexcept : finite_(true), value_(d) {}

    constexpr bool is_minus_infinity() const noexcept { return !finite_; }

    /// Throws std::domain_error for minus infinity.
    std::size_t value() const {
        if (!finite_) throw std::domain_error("degree of the zero polynomial has no value");
        return value_;
    }

    constexpr auto operator<=>(const Degree&) const noexcept = default;

   private:
    constexpr Degree() noexcept = default;
    bool finite_ = false;
    std::size_t value_ = 0;
};

/// Thrown by parse() on malformed polynomial literals.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class Poly {
   public:
    Poly() = default;  // zero polynomial

    static Poly from_word(Word w);
    static Poly from_words(std::vector<Word> words);
    /// Coefficient bits taken from a (possibly wider) packed bit-vector.
    static Poly from_bits(std::span<const Word> bits);
    static Poly monomial(std::size_t exponent);
    static Poly one() { return from_word(1); }
    static Poly x() { return from_word(2); }

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    Degree degree() const noexcept;
    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    std::size_t deg() const;

    bool coeff(std::size_t j) const noexcept;
    std::span<const Word> words() const noexcept { return words_; }
    std::size_t popcount() const noexcept;

    /// Numeric order of the bit-vector; coincides with (degree, value) order.
    std::strong_ordering operator<=>(const Poly& other) const noexcept;
    bool operator==(const Poly& other) const noexcept = default;

    Poly& operator+=(const Poly& other);

   private:
    explicit Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }
    void trim() noexcept;

    std::vector<Word> words_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
/// Exact quotient helper; throws std::domain_error if b does not divide a.
Poly div_exact(const Poly& a, const Poly& b);
/// Euclid. Nonzero GF(2) polynomials are all monic, so no normalisation.
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Poly square(const Poly& a);
/// Inverse of square(): keeps the even-position bits, halving exponents.
/// Throws std::domain_error if a is not a perfect square.
Poly sqrt_of_square(const Poly& a);
Poly pow(const Poly& a, std::size_t e);
/// Binary increment of the coefficient vector (next polynomial in numeric order).
Poly successor(const Poly& a);

Poly square_mod(const Poly& a, const Poly& f);
/// x^(2^k) mod f.
Poly pow2k_mod(std::size_t k, const Poly& f);
bool is_squarefree(const Poly& f);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
inline Poly operator%(const Poly& a, const Poly& b) { return rem(a, b); }

/// Accepts "x^3+x+1" style sums (unordered, "1"/"x^0"/"x"/"x^1") or a
/// "0x"-prefixed hex bit-vector.
Poly parse(std::string_view text);
/// Sum of monomials in descending exponent order; "0" for zero.
std::string format(const Poly& p);
/// "0x" followed by uppercase hex digits, no leading zeros; "0x0" for zero.
std::string to_hex(const Poly& p);

}  // namespace gf2q
