#include "sdc/bitvec.hpp"

#include <algorithm>

namespace sdc {

namespace {
void check_index(std::size_t i, std::size_t len) {
    if (i >= len) throw CodeError(Errc::BadInput, "coordinate index out of range");
}
} // namespace

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw CodeError(Errc::BadInput, "bit string may contain only 0 and 1");
    }
    return v;
}

BitVector BitVector::from_support(std::size_t len, const std::vector<int>& support) {
    BitVector v(len);
    for (int c : support) {
        if (c < 1 || static_cast<std::size_t>(c) > len)
            throw CodeError(Errc::BadInput, "support coordinate out of range");
        if (v.get(c - 1))
            throw CodeError(Errc::BadInput, "duplicate support coordinate");
        v.set(c - 1);
    }
    return v;
}

BitVector BitVector::ones(std::size_t len) {
    BitVector v(len);
    for (auto& w : v.w_) w = ~uint64_t{0};
    if (len % 64) v.w_.back() &= (uint64_t{1} << (len % 64)) - 1;
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
    BitVector v(len);
    check_index(i, len);
    v.set(i);
    return v;
}

BitVector BitVector::from_hex(std::size_t len, std::string_view hex) {
    const std::size_t digits = (len + 3) / 4;
    if (hex.size() != digits)
        throw CodeError(Errc::BadInput, "hex row has wrong length");
    BitVector v(len);
    for (std::size_t d = 0; d < digits; ++d) {
        char c = hex[d];
        int val;
        if (c >= '0' && c <= '9')
            val = c - '0';
        else if (c >= 'a' && c <= 'f')
            val = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            val = c - 'A' + 10;
        else
            throw CodeError(Errc::BadInput, "invalid hex digit");
        for (int b = 0; b < 4; ++b) {
            // Coordinate 4d+b+1 is the bit worth 8>>b of digit d.
            if (val & (8 >> b)) {
                std::size_t i = 4 * d + b;
                if (i >= len)
                    throw CodeError(Errc::BadInput, "nonzero pad bits in hex row");
                v.set(i);
            }
        }
    }
    return v;
}

bool BitVector::dot(const BitVector& o) const {
    if (len_ != o.len_) throw CodeError(Errc::DimensionMismatch, "dot of different lengths");
    uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw CodeError(Errc::DimensionMismatch, "xor of different lengths");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    if (len_ != o.len_) throw CodeError(Errc::DimensionMismatch, "and of different lengths");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

bool BitVector::operator<(const BitVector& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        uint64_t d = w_[i] ^ o.w_[i];
        if (d) {
            // The vector with 0 at the first differing coordinate is smaller.
            int b = std::countr_zero(d);
            return ((w_[i] >> b) & 1) == 0;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVector::to_hex() const {
    const std::size_t digits = (len_ + 3) / 4;
    std::string s(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (std::size_t d = 0; d < digits; ++d) {
        int val = 0;
        for (int b = 0; b < 4; ++b) {
            std::size_t i = 4 * d + b;
            if (i < len_ && get(i)) val |= 8 >> b;
        }
        s[d] = kHex[val];
    }
    return s;
}

std::vector<int> BitVector::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s.push_back(static_cast<int>(i) + 1);
    return s;
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : r_(std::move(rows)) {
    if (!r_.empty()) {
        cols_ = r_[0].size();
        for (const auto& r : r_)
            if (r.size() != cols_)
                throw CodeError(Errc::DimensionMismatch, "rows of different lengths");
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> r;
    r.reserve(rows.size());
    for (const auto& s : rows) r.push_back(BitVector::from_string(s));
    return BitMatrix(std::move(r));
}

void BitMatrix::append_row(const BitVector& v) {
    if (r_.empty() && cols_ == 0)
        cols_ = v.size();
    else if (v.size() != cols_)
        throw CodeError(Errc::DimensionMismatch, "appended row has wrong length");
    r_.push_back(v);
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
    if (v.size() != cols_) throw CodeError(Errc::DimensionMismatch, "row has wrong length");
    r_[i] = v;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i);
    return t;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (cols_ != o.rows())
        throw CodeError(Errc::DimensionMismatch, "matrix product dimension mismatch");
    BitMatrix res(rows(), o.cols());
    for (std::size_t i = 0; i < rows(); ++i) {
        BitVector acc(o.cols());
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) acc ^= o.row(j);
        res.set_row(i, acc);
    }
    return res;
}

BitVector BitMatrix::mul_vec(const BitVector& x) const {
    if (x.size() != cols_)
        throw CodeError(Errc::DimensionMismatch, "matrix-vector dimension mismatch");
    BitVector res(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        if (r_[i].dot(x)) res.set(i);
    return res;
}

} // namespace sdc
