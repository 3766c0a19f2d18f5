#include <doctest.h>

#include <sdc/covering.hpp>
#include <sdc/tables.hpp>

#include "helpers.hpp"

using namespace sdc;

TEST_SUITE("covering") {

TEST_CASE("delsarte bound counts nonzero dual weights") {
    CHECK(delsarte_bound(test::code_from({"11"})) == 1);
    CHECK(delsarte_bound(test::e8()) == 2);        // dual weights {4, 8}
    CHECK(delsarte_bound(test::golay24()) == 4);   // {8, 12, 16, 24}
    CHECK(delsarte_bound(test::i2n(8)) == 4);      // {2, 4, 6, 8}
}

TEST_CASE("coset minimum weights") {
    const LinearCode rep = test::code_from({"11"});
    CHECK(coset_min_weight(rep, BitVector::from_string("10")) == 1);
    CHECK(coset_min_weight(rep, BitVector::from_string("11")) == 0);
    const LinearCode h = test::e8();
    CHECK(coset_min_weight(h, BitVector::unit(8, 3)) == 1);
    CHECK(coset_min_weight(h, BitVector::from_string("11000000")) == 2);
    for (const BitVector& w : test::all_codewords(h))
        CHECK(coset_min_weight(h, w) == 0);
}

TEST_CASE("exact covering radius of classic codes") {
    CHECK(covering_radius_exact(test::code_from({"11"})) == 1);
    CHECK(covering_radius_exact(test::e8()) == 2);
    CHECK(covering_radius_exact(test::golay24()) == 4);
    CHECK(covering_radius_exact(test::i2n(8)) == 4);
}

TEST_CASE("exact covering radius never exceeds the Delsarte bound") {
    test::Rng rng(223);
    for (int t = 0; t < 40; ++t) {
        const int n = 4 + static_cast<int>(rng() % 10); // 4..13
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        const LinearCode c = test::random_code(rng, n, k);
        const int exact = covering_radius_exact(c);
        CHECK(exact <= delsarte_bound(c));
        if (n > 10) continue;
        // cross-check the exact value against a direct coset sweep
        int worst = 0;
        for (uint32_t v = 0; v < (uint32_t{1} << n); ++v) {
            BitVector x(n);
            for (int i = 0; i < n; ++i)
                if ((v >> i) & 1u) x.set(i);
            worst = std::max(worst, coset_min_weight(c, x));
        }
        CHECK(exact == worst);
    }
}

TEST_CASE("exact covering radius rejects oversized syndrome spaces") {
    test::Rng rng(227);
    const LinearCode c = test::random_code(rng, 40, 4); // 2^36 syndromes
    CHECK_THROWS_AS((void)covering_radius_exact(c, uint64_t{1} << 20), CodeError);
}

TEST_CASE("covering-radius certification requires a shadow of minimum weight 12") {
    const Tables tb = Tables::load("data");
    // beta = 8 puts weight-8 vectors in the shadow, violating the precondition
    CHECK_THROWS_AS((void)certify_cr12(tb.code("C64_4")), CodeError);
    CHECK_THROWS_AS((void)certify_cr12(test::e8()), CodeError);
}

TEST_CASE("covering-radius certificates for the neighbors of C64_1") {
    const Tables tb = Tables::load("data");
    auto [r1, r2] = certify_cr12(tb.code("C64_1"));
    for (const CoveringCertificate* cert : {&r1, &r2}) {
        CHECK(cert->upper == 12);
        CHECK(cert->upper_method == BoundMethod::Delsarte);
        CHECK(cert->lower == 12);
        REQUIRE(cert->conclusion.has_value());
        CHECK(*cert->conclusion == 12);
        CHECK(cert->witness.size() == 64);
    }
    CHECK(r1.to_report() ==
          "upper 12 (external distance), lower 12 (coset of 80000000033f16af); "
          "covering radius = 12");
}

} // TEST_SUITE
