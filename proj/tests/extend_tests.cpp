#include <doctest.h>

#include <algorithm>
#include <set>

#include <sdc/extend.hpp>
#include <sdc/tables.hpp>

#include "helpers.hpp"

using namespace sdc;

TEST_SUITE("extend") {

TEST_CASE("recipe round trip") {
    const ExtensionRecipe r = ExtensionRecipe::from_line("C64_1:101");
    CHECK(r.parent == "C64_1");
    CHECK(r.x == BitVector::from_string("101"));
    CHECK(r.to_line() == "C64_1:101");
    CHECK_THROWS_AS((void)ExtensionRecipe::from_line("no-colon"), CodeError);
}

TEST_CASE("coset split of the repetition code") {
    const LinearCode c = test::code_from({"11"});
    const CosetSplit s = split_cosets(c, BitVector::from_string("10"));
    CHECK(s.c0.k() == 0);
    CHECK(s.rep_c2 == BitVector::from_string("11"));
    CHECK(s.rep_c1 == BitVector::from_string("10"));
    CHECK(s.rep_c3 == BitVector::from_string("01"));
}

TEST_CASE("the four cosets partition the dual of C0") {
    test::Rng rng(179);
    for (int t = 0; t < 12; ++t) {
        const int n = 2 * (2 + static_cast<int>(rng() % 4)); // 4..10
        const LinearCode c = test::random_self_dual(rng, n);
        BitVector x = test::random_vector(rng, n);
        if (x.weight() % 2 == 0) x.flip(static_cast<std::size_t>(rng() % n));
        const CosetSplit s = split_cosets(c, x);
        CHECK(s.c0.k() == c.k() - 1);
        CHECK(s.c0.contains(s.rep_c1 ^ x)); // C1 is the coset of x

        const LinearCode c0p = dual(s.c0);
        std::set<std::string> seen;
        int in_c = 0, in_xc = 0;
        for (const BitVector& w : test::all_codewords(s.c0)) {
            for (const BitVector& rep :
                 {BitVector(n), s.rep_c1, s.rep_c2, s.rep_c3}) {
                const BitVector v = w ^ rep;
                CHECK(c0p.contains(v));
                seen.insert(v.to_string());
                if (c.contains(v)) ++in_c;
                if (c.contains(v ^ x)) ++in_xc;
            }
        }
        // disjoint union covering (C0)^perp, half of it C, half x + C
        CHECK(seen.size() == std::size_t{1} << (s.c0.k() + 2));
        CHECK(in_c == 1 << c.k());
        CHECK(in_xc == in_c);
    }
}

TEST_CASE("extension of the repetition code") {
    const LinearCode ext =
        tsai_extend(test::code_from({"11"}), BitVector::from_string("10"));
    CHECK(ext.n() == 4);
    CHECK(ext.k() == 2);
    CHECK(ext.is_self_dual());
    CHECK(ext.min_weight() == 2);
    for (const char* w : {"0000", "1111", "1010", "0101"})
        CHECK(ext.contains(BitVector::from_string(w)));
}

TEST_CASE("extension properties on random self-dual codes") {
    test::Rng rng(181);
    for (int t = 0; t < 12; ++t) {
        const int n = 2 * (2 + static_cast<int>(rng() % 4));
        const LinearCode c = test::random_self_dual(rng, n);
        BitVector x = test::random_vector(rng, n);
        if (x.weight() % 2 == 0) x.flip(static_cast<std::size_t>(rng() % n));
        const LinearCode ext = tsai_extend(c, x);
        CHECK(ext.n() == n + 2);
        CHECK(ext.k() == c.k() + 1);
        CHECK(ext.is_self_dual());

        // prefix (0,0) u (1,1) words project onto C exactly
        std::set<std::string> projected, original;
        for (const BitVector& w : test::all_codewords(ext)) {
            if (w.get(0) != w.get(1)) continue;
            std::string tail = w.to_string().substr(2);
            projected.insert(tail);
            CHECK(c.contains(BitVector::from_string(tail)));
        }
        for (const BitVector& w : test::all_codewords(c)) original.insert(w.to_string());
        CHECK(projected == original);

        // shifting x inside its C0-coset changes nothing
        const CosetSplit s = split_cosets(c, x);
        for (const BitVector& w : test::all_codewords(s.c0)) {
            CHECK(tsai_extend(c, x ^ w) == ext);
            break;
        }
        // shifting x by a C2 member swaps the two new coordinates
        std::vector<int> swap01(static_cast<std::size_t>(n) + 2);
        for (std::size_t i = 0; i < swap01.size(); ++i) swap01[i] = static_cast<int>(i);
        std::swap(swap01[0], swap01[1]);
        CHECK(tsai_extend(c, x ^ s.rep_c2) == ext.permuted(swap01));
    }
}

TEST_CASE("extension input validation") {
    const LinearCode c = test::code_from({"1100", "0011"});
    CHECK_THROWS_AS((void)tsai_extend(c, BitVector::from_string("1100")), CodeError); // even
    CHECK_THROWS_AS((void)tsai_extend(c, BitVector::from_string("10")), CodeError);
    CHECK_THROWS_AS((void)tsai_extend(test::code_from({"1110"}), BitVector::from_string("1000")),
                    CodeError); // not self-dual
}

TEST_CASE("a length-66 extremal extension") {
    const Tables tb = Tables::load("data");
    const Table4Row& row = tb.t4_row("C66_1");
    const LinearCode ext = tsai_extend(tb.code(row.parent), table4_x(row));
    CHECK(ext.n() == 66);
    CHECK(ext.k() == 33);
    CHECK(ext.is_self_dual());
    CHECK(parity_class(ext) == ParityClass::SinglyEven);
    CHECK(ext.min_weight() == 12);
    CHECK(ext == tb.code("C66_1"));
}

} // TEST_SUITE
