#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/common.hpp"

namespace sdc {

// Fixed-length vector over GF(2).  Coordinate i (0-based internally) lives in
// word i/64, bit i%64.  Public, human-facing coordinate lists (supports,
// pivot columns) are 1-based throughout, matching the usual coding-theory
// convention; accessors here take 0-based indices.  Bits beyond the length
// are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits);
    // 1-based coordinates; out-of-range or duplicate entries are rejected.
    static BitVector from_support(std::size_t len, const std::vector<int>& support);
    static BitVector ones(std::size_t len);
    static BitVector unit(std::size_t len, std::size_t i);
    // Hex with coordinate 1 as the most significant bit of the first digit;
    // ceil(len/4) digits, trailing pad bits zero.
    static BitVector from_hex(std::size_t len, std::string_view hex);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (uint64_t x : w_) w += std::popcount(x);
        return w;
    }
    bool is_zero() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }
    // Inner product mod 2.
    bool dot(const BitVector& o) const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    BitVector& operator&=(const BitVector& o);
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    // Lexicographic by coordinate, coordinate 1 most significant.
    bool operator<(const BitVector& o) const;

    std::string to_string() const;
    std::string to_hex() const;
    std::vector<int> support() const; // 1-based

    const std::vector<uint64_t>& words() const { return w_; }
    uint64_t word(std::size_t i) const { return w_[i]; }
    std::size_t word_count() const { return w_.size(); }

private:
    std::size_t len_ = 0;
    std::vector<uint64_t> w_;
};

// Dense GF(2) matrix as a list of equal-length rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), r_(rows, BitVector(cols)) {}
    explicit BitMatrix(std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return r_[i]; }
    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { r_[i].set(j, v); }

    void append_row(const BitVector& v);
    void set_row(std::size_t i, const BitVector& v);
    void xor_row(std::size_t dst, const BitVector& v) { r_[dst] ^= v; }
    void swap_rows(std::size_t i, std::size_t j) { std::swap(r_[i], r_[j]); }

    BitMatrix transposed() const;
    BitMatrix mul(const BitMatrix& o) const;
    // m * x^T, result has length rows().
    BitVector mul_vec(const BitVector& x) const;

    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && r_ == o.r_; }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    const std::vector<BitVector>& row_list() const { return r_; }

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> r_;
};

} // namespace sdc
