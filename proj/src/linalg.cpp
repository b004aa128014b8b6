#include "gf2q/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gf2q {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void xor_into(std::span<Word> dst, std::span<const Word> src) noexcept {
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

}  // namespace

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("bit-vector length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

BitMatrix::BitMatrix(std::size_t n) : n_(n), stride_(words_for(n)), data_(n * stride_, 0) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    BitMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
        m.set_row(i, rows[i].words());
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const char c = rows[i][j];
            if (c != '0' && c != '1') throw std::invalid_argument("matrix rows must be 0/1 strings");
            m.set(i, j, c == '1');
        }
    }
    return m;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) noexcept {
    const Word mask = Word{1} << (j % kWordBits);
    if (v) {
        row(i)[j / kWordBits] |= mask;
    } else {
        row(i)[j / kWordBits] &= ~mask;
    }
}

BitVector BitMatrix::row_vector(std::size_t i) const {
    BitVector v(n_);
    std::copy_n(row(i).begin(), stride_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t i, std::span<const Word> bits) {
    auto dst = row(i);
    std::fill(dst.begin(), dst.end(), 0);
    std::copy_n(bits.begin(), std::min(bits.size(), stride_), dst.begin());
    // mask anything past column n-1
    if (n_ % kWordBits) dst[stride_ - 1] &= (Word{1} << (n_ % kWordBits)) - 1;
}

std::string BitMatrix::row_string(std::size_t i) const {
    std::string s(n_, '0');
    for (std::size_t j = 0; j < n_; ++j) {
        if (get(i, j)) s[j] = '1';
    }
    return s;
}

BitMatrix identity(std::size_t n) { return BitMatrix::identity(n); }

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = a.size();
    BitMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto out = c.row(i);
        auto ar = a.row(i);
        for (std::size_t w = 0; w < ar.size(); ++w) {
            Word bits = ar[w];
            while (bits) {
                const std::size_t j = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                xor_into(out, b.row(j));
                bits &= bits - 1;
            }
        }
    }
    return c;
}

BitMatrix matadd(const BitMatrix& a, const BitMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
    BitMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i) xor_into(c.row(i), b.row(i));
    return c;
}

BitMatrix matpow(const BitMatrix& a, std::uint64_t e) {
    BitMatrix result = identity(a.size());
    BitMatrix base = a;
    while (e) {
        if (e & 1) result = matmul(result, base);
        e >>= 1;
        if (e) base = matmul(base, base);
    }
    return result;
}

BitVector vecmul(const BitVector& v, const BitMatrix& a) {
    if (v.size() != a.size()) throw std::invalid_argument("vector/matrix dimension mismatch");
    BitVector out(a.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v.get(j)) xor_into(out.words(), a.row(j));
    }
    return out;
}

std::size_t rank(std::vector<BitVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i].get(col)) rows[i] ^= rows[r];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const BitMatrix& a) {
    std::vector<BitVector> rows;
    rows.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) rows.push_back(a.row_vector(i));
    return rank(std::move(rows));
}

std::vector<BitVector> nullspace(const BitMatrix& a) {
    // Row-reduce [A | I]. Each row of A whose left half vanishes carries, in
    // its right half, the combination of original rows that sums to zero.
    const std::size_t n = a.size();
    std::vector<BitVector> left;
    std::vector<BitVector> right;
    left.reserve(n);
    right.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        left.push_back(a.row_vector(i));
        BitVector e(n);
        e.set(i);
        right.push_back(std::move(e));
    }
    std::vector<bool> used(n, false);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && left[i].get(col)) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) continue;
        used[pivot] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != pivot && left[i].get(col)) {
                left[i] ^= left[pivot];
                right[i] ^= right[pivot];
            }
        }
    }
    std::vector<BitVector> basis;
    for (std::size_t i = 0; i < n; ++i) {
        if (!used[i]) basis.push_back(std::move(right[i]));
    }
    return basis;
}

std::uint64_t multiplicative_order(const BitMatrix& a, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("order bound must be positive");
    if (rank(a) != a.size()) throw std::domain_error("matrix is singular: no order exists");
    const BitMatrix id = identity(a.size());
    BitMatrix power = a;
    for (std::uint64_t k = 1;; ++k) {
        if (power == id) return k;
        if (k >= bound) {
            throw std::range_error("multiplicative order exceeds bound " + std::to_string(bound));
        }
        power = matmul(power, a);
    }
}

}  // namespace gf2q
