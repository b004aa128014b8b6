// Dense square matrices over GF(2) with bit-packed rows.
//
// Row-vector convention throughout: a vector v acts as v*A, so row i of A
// is the image of the i-th unit vector. The Berlekamp matrix is defined
// row-wise, and this keeps its contracts untransposed.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gf2q/poly.hpp"

namespace gf2q {

class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t j) const noexcept { return (words_[j / kWordBits] >> (j % kWordBits)) & 1; }
    void set(std::size_t j, bool v = true) noexcept {
        const Word mask = Word{1} << (j % kWordBits);
        if (v) {
            words_[j / kWordBits] |= mask;
        } else {
            words_[j / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t j) noexcept { words_[j / kWordBits] ^= Word{1} << (j % kWordBits); }
    bool is_zero() const noexcept;
    BitVector& operator^=(const BitVector& other);

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    bool operator==(const BitVector&) const noexcept = default;

   private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

class BitMatrix {
   public:
    /// n x n zero matrix; throws std::invalid_argument for n = 0.
    explicit BitMatrix(std::size_t n);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    /// Rows given as strings of '0'/'1', column 0 first.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t size() const noexcept { return n_; }
    bool get(std::size_t i, std::size_t j) const noexcept {
        return (row(i)[j / kWordBits] >> (j % kWordBits)) & 1;
    }
    void set(std::size_t i, std::size_t j, bool v = true) noexcept;
    void flip(std::size_t i, std::size_t j) noexcept { row(i)[j / kWordBits] ^= Word{1} << (j % kWordBits); }

    std::span<const Word> row(std::size_t i) const noexcept { return {data_.data() + i * stride_, stride_}; }
    std::span<Word> row(std::size_t i) noexcept { return {data_.data() + i * stride_, stride_}; }
    BitVector row_vector(std::size_t i) const;
    void set_row(std::size_t i, std::span<const Word> bits);

    /// Row i rendered as "0110..." with column 0 first.
    std::string row_string(std::size_t i) const;

    bool operator==(const BitMatrix&) const noexcept = default;

   private:
    std::size_t n_;
    std::size_t stride_;
    std::vector<Word> data_;
};

BitMatrix identity(std::size_t n);
/// Throws std::invalid_argument on dimension mismatch.
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitMatrix matadd(const BitMatrix& a, const BitMatrix& b);
BitMatrix matpow(const BitMatrix& a, std::uint64_t e);
/// v * A.
BitVector vecmul(const BitVector& v, const BitMatrix& a);

std::size_t rank(const BitMatrix& a);
/// Rank of an arbitrary list of equal-length vectors.
std::size_t rank(std::vector<BitVector> rows);

/// Basis of the left nullspace {v : v*A = 0}. Elimination pivots on the
/// lowest unused row index with a set bit, column by column, so the basis
/// is reproducible.
std::vector<BitVector> nullspace(const BitMatrix& a);

/// Least k >= 1 with A^k = I, found by stepping through powers of A.
/// Throws std::domain_error if A is singular and std::range_error if no
/// such k <= bound exists.
std::uint64_t multiplicative_order(const BitMatrix& a, std::uint64_t bound);

}  // namespace gf2q
