#include "gf2q/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>

namespace gf2q {

namespace {

std::size_t top_bit(std::span<const Word> w) noexcept {
    // caller guarantees the last word is nonzero
    return (w.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(w.back()));
}

// dst ^= src << shift; dst must already be wide enough.
void xor_shifted(std::vector<Word>& dst, std::span<const Word> src, std::size_t shift) noexcept {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = shift % kWordBits;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
        return;
    }
    Word carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= (src[i] << bs) | carry;
        carry = src[i] >> (kWordBits - bs);
    }
    if (carry) dst[src.size() + ws] ^= carry;
}

// Spreads the 32 bits of v to the even positions of a 64-bit word.
Word spread32(Word v) noexcept {
    v &= 0xFFFFFFFFull;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v << 2)) & 0x3333333333333333ull;
    v = (v | (v << 1)) & 0x5555555555555555ull;
    return v;
}

// Inverse of spread32: gathers the even-position bits into the low 32 bits.
Word gather_even(Word v) noexcept {
    v &= 0x5555555555555555ull;
    v = (v | (v >> 1)) & 0x3333333333333333ull;
    v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v >> 4)) & 0x00FF00FF00FF00FFull;
    v = (v | (v >> 8)) & 0x0000FFFF0000FFFFull;
    v = (v | (v >> 16)) & 0x00000000FFFFFFFFull;
    return v;
}

// Reduces r in place modulo b (b nonzero); optionally records quotient bits.
void reduce_in_place(std::vector<Word>& r, const Poly& b, std::vector<Word>* quotient) {
    const std::size_t db = b.deg();
    auto bw = b.words();
    while (!r.empty() && r.back() == 0) r.pop_back();
    while (!r.empty()) {
        const std::size_t t = top_bit(r);
        if (t < db) break;
        const std::size_t shift = t - db;
        if (quotient) {
            if (quotient->size() <= shift / kWordBits) quotient->resize(shift / kWordBits + 1, 0);
            (*quotient)[shift / kWordBits] |= Word{1} << (shift % kWordBits);
        }
        xor_shifted(r, bw, shift);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

void Poly::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly Poly::from_word(Word w) { return Poly(std::vector<Word>{w}); }

Poly Poly::from_words(std::vector<Word> words) { return Poly(std::move(words)); }

Poly Poly::from_bits(std::span<const Word> bits) {
    return Poly(std::vector<Word>(bits.begin(), bits.end()));
}

Poly Poly::monomial(std::size_t exponent) {
    std::vector<Word> w(exponent / kWordBits + 1, 0);
    w.back() = Word{1} << (exponent % kWordBits);
    return Poly(std::move(w));
}

Degree Poly::degree() const noexcept {
    if (words_.empty()) return Degree::minus_infinity();
    return Degree(top_bit(words_));
}

std::size_t Poly::deg() const {
    if (words_.empty()) throw std::domain_error("degree of the zero polynomial has no value");
    return top_bit(words_);
}

bool Poly::coeff(std::size_t j) const noexcept {
    const std::size_t w = j / kWordBits;
    return w < words_.size() && ((words_[w] >> (j % kWordBits)) & 1);
}

std::size_t Poly::popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::strong_ordering Poly::operator<=>(const Poly& other) const noexcept {
    if (words_.size() != other.words_.size()) return words_.size() <=> other.words_.size();
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
    }
    return std::strong_ordering::equal;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

// ---------------------------------------------------------------------------
// Arithmetic

Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // iterate over the sparser operand's set bits
    const Poly& sparse = a.popcount() <= b.popcount() ? a : b;
    const Poly& dense = &sparse == &a ? b : a;
    std::vector<Word> out((a.deg() + b.deg()) / kWordBits + 1, 0);
    auto sw = sparse.words();
    for (std::size_t i = 0; i < sw.size(); ++i) {
        Word w = sw[i];
        while (w) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(w));
            xor_shifted(out, dense.words(), i * kWordBits + bit);
            w &= w - 1;
        }
    }
    return Poly::from_words(std::move(out));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Word> r(a.words().begin(), a.words().end());
    r.push_back(0);
    std::vector<Word> q;
    reduce_in_place(r, b, &q);
    return {Poly::from_words(std::move(q)), Poly::from_words(std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Word> r(a.words().begin(), a.words().end());
    r.push_back(0);
    reduce_in_place(r, b, nullptr);
    return Poly::from_words(std::move(r));
}

Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error(format(b) + " does not divide " + format(a));
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly u = a;
    Poly v = b;
    while (!v.is_zero()) {
        Poly r = rem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Poly derivative(const Poly& a) {
    // d/dx x^j = j x^(j-1): only odd j survive, landing on even positions.
    std::vector<Word> out(a.words().size(), 0);
    auto w = a.words();
    // word size is even, so a shift by one never crosses a word boundary
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = (w[i] & 0xAAAAAAAAAAAAAAAAull) >> 1;
    return Poly::from_words(std::move(out));
}

Poly square(const Poly& a) {
    std::vector<Word> out(a.words().size() * 2, 0);
    auto w = a.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[2 * i] = spread32(w[i]);
        out[2 * i + 1] = spread32(w[i] >> 32);
    }
    return Poly::from_words(std::move(out));
}

Poly sqrt_of_square(const Poly& a) {
    auto w = a.words();
    std::vector<Word> out((w.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] & 0xAAAAAAAAAAAAAAAAull) {
            throw std::domain_error(format(a) + " is not a perfect square");
        }
        out[i / 2] |= gather_even(w[i]) << (32 * (i % 2));
    }
    return Poly::from_words(std::move(out));
}

Poly pow(const Poly& a, std::size_t e) {
    Poly result = Poly::one();
    Poly base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = square(base);
    }
    return result;
}

Poly successor(const Poly& a) {
    std::vector<Word> w(a.words().begin(), a.words().end());
    for (auto& word : w) {
        if (++word != 0) return Poly::from_words(std::move(w));
    }
    w.push_back(1);
    return Poly::from_words(std::move(w));
}

Poly square_mod(const Poly& a, const Poly& f) {
    if (f.degree() < Degree(1)) throw std::domain_error("modulus must have degree >= 1");
    return rem(square(a), f);
}

Poly pow2k_mod(std::size_t k, const Poly& f) {
    if (f.degree() < Degree(1)) throw std::domain_error("modulus must have degree >= 1");
    Poly r = rem(Poly::x(), f);
    for (std::size_t i = 0; i < k; ++i) r = square_mod(r, f);
    return r;
}

bool is_squarefree(const Poly& f) {
    if (f.degree() < Degree(1)) throw std::domain_error("squarefree test needs degree >= 1");
    const Poly d = derivative(f);
    if (d.is_zero()) return false;
    return gcd(f, d).is_one();
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Poly parse_hex(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("malformed hex literal '" + std::string(whole) + "'");
    std::vector<Word> words((digits.size() * 4 + kWordBits - 1) / kWordBits, 0);
    std::size_t bit = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        Word v;
        if (c >= '0' && c <= '9') {
            v = static_cast<Word>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            v = static_cast<Word>(c - 'a' + 10);
        } else {
            throw ParseError("invalid hex digit '" + std::string(1, *it) + "' in '" + std::string(whole) + "'");
        }
        words[bit / kWordBits] |= v << (bit % kWordBits);
    }
    return Poly::from_words(std::move(words));
}

std::size_t parse_term(std::string_view term) {
    if (term == "1") return 0;
    if (term == "x") return 1;
    if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
        auto digits = term.substr(2);
        std::size_t e = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) return e;
    }
    throw ParseError("malformed term '" + std::string(term) + "'");
}

}  // namespace

Poly parse(std::string_view text) {
    const std::string_view s = trim_view(text);
    if (s.empty()) throw ParseError("empty polynomial literal");
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) return parse_hex(s.substr(2), s);
    if (s == "0") return {};

    std::set<std::size_t> exponents;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = s.find('+', start);
        const std::string_view raw = s.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        const std::string_view term = trim_view(raw);
        if (term.empty()) throw ParseError("empty term in '" + std::string(s) + "'");
        const std::size_t e = parse_term(term);
        if (!exponents.insert(e).second) throw ParseError("duplicate monomial '" + std::string(term) + "'");
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    std::vector<Word> words(*exponents.rbegin() / kWordBits + 1, 0);
    for (std::size_t e : exponents) words[e / kWordBits] |= Word{1} << (e % kWordBits);
    return Poly::from_words(std::move(words));
}

std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t j = p.deg() + 1; j-- > 0;) {
        if (!p.coeff(j)) continue;
        if (!out.empty()) out += '+';
        if (j == 0) {
            out += '1';
        } else if (j == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(j);
        }
    }
    return out;
}

std::string to_hex(const Poly& p) {
    if (p.is_zero()) return "0x0";
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string digits;
    const std::size_t nibbles = p.deg() / 4 + 1;
    auto w = p.words();
    for (std::size_t n = nibbles; n-- > 0;) {
        const std::size_t bit = n * 4;
        digits += kDigits[(w[bit / kWordBits] >> (bit % kWordBits)) & 0xF];
    }
    return "0x" + digits;
}

}  // namespace gf2q
