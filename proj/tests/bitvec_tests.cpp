#include <doctest.h>

#include <algorithm>
#include <random>

#include <sdc/bitvec.hpp>

#include "helpers.hpp"

using namespace sdc;

TEST_SUITE("bitvec") {

TEST_CASE("string round trip and accessors") {
    const BitVector v = BitVector::from_string("0110100");
    CHECK(v.size() == 7);
    CHECK(v.to_string() == "0110100");
    CHECK(v.weight() == 3);
    CHECK_FALSE(v.get(0));
    CHECK(v.get(1));
    CHECK(v.get(4));
    CHECK(v.support() == std::vector<int>{2, 3, 5});
}

TEST_CASE("from_support is 1-based and validated") {
    const BitVector v = BitVector::from_support(6, {1, 4, 6});
    CHECK(v.to_string() == "100101");
    CHECK_THROWS_AS((void)BitVector::from_support(6, {0}), CodeError);
    CHECK_THROWS_AS((void)BitVector::from_support(6, {7}), CodeError);
    CHECK_THROWS_AS((void)BitVector::from_support(6, {2, 2}), CodeError);
}

TEST_CASE("hex uses coordinate 1 as most significant bit") {
    // 10000111 -> 0x87
    CHECK(BitVector::from_string("10000111").to_hex() == "87");
    CHECK(BitVector::from_hex(8, "87").to_string() == "10000111");
    // odd length pads with zero bits
    const BitVector v = BitVector::from_string("10110");
    CHECK(v.to_hex() == "b0");
    CHECK(BitVector::from_hex(5, "b0") == v);
    // pad bits must be zero
    CHECK_THROWS_AS((void)BitVector::from_hex(5, "b1"), CodeError);
    // digit count must match
    CHECK_THROWS_AS((void)BitVector::from_hex(8, "871"), CodeError);
}

TEST_CASE("hex round trip on random vectors") {
    test::Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 130);
        const BitVector v = test::random_vector(rng, n);
        CHECK(BitVector::from_hex(n, v.to_hex()) == v);
        CHECK(BitVector::from_string(v.to_string()) == v);
    }
}

TEST_CASE("lexicographic order, coordinate 1 most significant") {
    CHECK(BitVector::from_string("0111") < BitVector::from_string("1000"));
    CHECK(BitVector::from_string("1011") < BitVector::from_string("1100"));
    CHECK_FALSE(BitVector::from_string("100") < BitVector::from_string("100"));
    // agrees with string comparison on random pairs
    test::Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 90);
        const BitVector a = test::random_vector(rng, n), b = test::random_vector(rng, n);
        CHECK((a < b) == (a.to_string() < b.to_string()));
    }
}

TEST_CASE("xor, and, dot against naive") {
    test::Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 100);
        const BitVector a = test::random_vector(rng, n), b = test::random_vector(rng, n);
        const BitVector x = a ^ b, m = a & b;
        bool dot = false;
        for (int i = 0; i < n; ++i) {
            CHECK(x.get(i) == (a.get(i) != b.get(i)));
            CHECK(m.get(i) == (a.get(i) && b.get(i)));
            dot ^= a.get(i) && b.get(i);
        }
        CHECK(a.dot(b) == dot);
    }
}

TEST_CASE("unit and ones") {
    CHECK(BitVector::unit(5, 2).to_string() == "00100");
    CHECK(BitVector::ones(4).to_string() == "1111");
    CHECK(BitVector::ones(70).weight() == 70);
}

TEST_CASE("bits beyond the length stay zero") {
    BitVector v = BitVector::ones(67);
    const BitVector w = v ^ BitVector::ones(67);
    CHECK(w.is_zero());
    CHECK((v.word(1) >> 3) == 0);
}

TEST_CASE("matrix basics") {
    const BitMatrix m = BitMatrix::from_strings({"110", "011"});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.transposed().transposed() == m);
    const BitMatrix id = BitMatrix::identity(3);
    CHECK(m.mul(id) == m);
    // (A B)^T == B^T A^T on randoms
    test::Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8),
                  c2 = 1 + static_cast<int>(rng() % 8);
        BitMatrix a(0, c), b(0, c2);
        for (int i = 0; i < r; ++i) a.append_row(test::random_vector(rng, c));
        for (int i = 0; i < c; ++i) b.append_row(test::random_vector(rng, c2));
        CHECK(a.mul(b).transposed() == b.transposed().mul(a.transposed()));
    }
}

} // TEST_SUITE
