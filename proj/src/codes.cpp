#include "sdc/gf2.hpp"
#include "sdc/linear_code.hpp"

namespace sdc {

namespace {

// Basis rows of the singly even part: first all doubly even rows, then the
// pairwise sums with the first singly even row.  Returns the index list of
// singly even basis rows too.
std::pair<BitMatrix, std::vector<int>> doubly_even_basis(const LinearCode& c) {
    std::vector<int> odd2; // rows with weight == 2 (mod 4)
    const auto& g = c.standard_basis();
    for (int i = 0; i < c.k(); ++i)
        if (g.row(i).weight() % 4 == 2) odd2.push_back(i);
    BitMatrix rows(0, c.n());
    for (int i = 0; i < c.k(); ++i)
        if (g.row(i).weight() % 4 == 0) rows.append_row(g.row(i));
    for (std::size_t j = 1; j < odd2.size(); ++j)
        rows.append_row(g.row(odd2[0]) ^ g.row(odd2[j]));
    return {rows, odd2};
}

} // namespace

std::pair<BitMatrix, BitVector> orthogonal_split(const LinearCode& c, const BitVector& x) {
    if (x.size() != static_cast<std::size_t>(c.n()))
        throw CodeError(Errc::DimensionMismatch, "x length differs from code length");
    BitMatrix rows(0, c.n());
    BitVector outside;
    bool have_outside = false;
    for (int i = 0; i < c.k(); ++i) {
        const BitVector& y = c.standard_basis().row(i);
        if (!y.dot(x)) {
            rows.append_row(y);
        } else if (!have_outside) {
            outside = y;
            have_outside = true;
        } else {
            rows.append_row(y ^ outside);
        }
    }
    if (!have_outside)
        throw CodeError(Errc::NotANeighbor, "x is orthogonal to the whole code");
    return {std::move(rows), std::move(outside)};
}

LinearCode dual(const LinearCode& c) {
    BitMatrix basis = nullspace(c.standard_basis());
    if (basis.rows() == 0)
        throw CodeError(Errc::BadInput, "dual of the full space is the zero code");
    return LinearCode(basis);
}

ParityClass parity_class(const LinearCode& c) {
    if (!c.is_self_dual())
        throw CodeError(Errc::NotSelfDual, "parity class defined for self-dual codes");
    const auto& g = c.standard_basis();
    for (int i = 0; i < c.k(); ++i)
        if (g.row(i).weight() % 4 != 0) return ParityClass::SinglyEven;
    return ParityClass::DoublyEven;
}

LinearCode doubly_even_subcode(const LinearCode& c) {
    if (parity_class(c) != ParityClass::SinglyEven)
        throw CodeError(Errc::PreconditionFailed,
                        "doubly even subcode requires a singly even self-dual code");
    auto [rows, odd2] = doubly_even_basis(c);
    LinearCode c0 = LinearCode(rows);
    return c0;
}

ShadowReport shadow(const LinearCode& c) {
    if (parity_class(c) != ParityClass::SinglyEven)
        throw CodeError(Errc::PreconditionFailed, "shadow requires a singly even self-dual code");
    auto [rows, odd2] = doubly_even_basis(c);
    LinearCode c0 = LinearCode(rows);
    const BitVector y2 = c.standard_basis().row(odd2[0]);
    // A representative of the shadow: any vector of C0-perp outside C.
    BitMatrix perp = nullspace(c0.standard_basis());
    BitVector v(c.n());
    bool found = false;
    for (std::size_t i = 0; i < perp.rows(); ++i)
        if (!c.contains(perp.row(i))) {
            v = perp.row(i);
            found = true;
            break;
        }
    if (!found)
        throw CodeError(Errc::PreconditionFailed, "shadow is empty (internal inconsistency)");
    ShadowReport rep;
    BitVector r1 = c0.reduce(v), r3 = c0.reduce(v ^ y2);
    if (r3 < r1) std::swap(r1, r3);
    rep.rep_c1 = r1;
    rep.rep_c3 = r3;
    rep.distribution = shadow_distribution(c.weight_distribution(), c.k());
    rep.min_weight = rep.distribution.min_nonzero();
    return rep;
}

const char* family_name(EnumeratorFamily f) {
    switch (f) {
    case EnumeratorFamily::W64_1: return "W64_1";
    case EnumeratorFamily::W64_2: return "W64_2";
    case EnumeratorFamily::W66_1: return "W66_1";
    case EnumeratorFamily::W66_2: return "W66_2";
    case EnumeratorFamily::W66_3: return "W66_3";
    }
    return "?";
}

namespace {

[[noreturn]] void unclassifiable(const std::string& why) {
    throw CodeError(Errc::Unclassifiable, "not an admissible extremal enumerator: " + why);
}

void expect(bool cond, const char* why) {
    if (!cond) unclassifiable(why);
}

} // namespace

EnumeratorClass classify_enumerator(const LinearCode& c) {
    const int n = c.n();
    if (n != 64 && n != 66) unclassifiable("length is not 64 or 66");
    if (!c.is_self_dual()) unclassifiable("not self-dual");
    if (parity_class(c) != ParityClass::SinglyEven) unclassifiable("not singly even");
    if (c.min_weight() != rains_bound(n)) unclassifiable("not extremal");
    const WeightDistribution& wd = c.weight_distribution();
    const WeightDistribution sh = shadow_distribution(wd, c.k());
    const int smin = sh.min_nonzero();
    const uint64_t a12 = wd.a[12], a14 = wd.a[14];
    EnumeratorClass res{EnumeratorFamily::W64_1, std::nullopt};
    if (n == 64) {
        // A12 = 1312 + 16 beta for both families.
        expect(a12 >= 1312 && (a12 - 1312) % 16 == 0, "A12 shape");
        const int beta = static_cast<int>((a12 - 1312) / 16);
        if (smin == 4) {
            res.family = EnumeratorFamily::W64_1;
            expect(beta >= 14 && beta <= 104, "beta range for W64_1");
            expect(a14 == 22016 - 64 * static_cast<uint64_t>(beta), "A14 for W64_1");
            expect(sh.a[4] == 1, "S4 for W64_1");
            expect(sh.a[8] == static_cast<uint64_t>(beta - 14), "S8 for W64_1");
            expect(sh.a[12] == 3419 - 12 * static_cast<uint64_t>(beta), "S12 for W64_1");
        } else {
            res.family = EnumeratorFamily::W64_2;
            expect(beta >= 0 && beta <= 277, "beta range for W64_2");
            expect(a14 == 23040 - 64 * static_cast<uint64_t>(beta), "A14 for W64_2");
            expect(sh.a[4] == 0, "S4 for W64_2");
            expect(sh.a[8] == static_cast<uint64_t>(beta), "S8 for W64_2");
            expect(sh.a[12] == 3328 - 12 * static_cast<uint64_t>(beta), "S12 for W64_2");
        }
        res.beta = beta;
    } else {
        if (smin == 1) {
            res.family = EnumeratorFamily::W66_2;
            expect(a12 == 1690, "A12 for W66_2");
            expect(a14 == 7990, "A14 for W66_2");
            expect(sh.a[1] == 1 && sh.a[13] == 9680, "shadow for W66_2");
            res.beta = std::nullopt;
            return res;
        }
        expect(a12 >= 858 && (a12 - 858) % 8 == 0, "A12 shape");
        const int beta = static_cast<int>((a12 - 858) / 8);
        if (smin == 5) {
            res.family = EnumeratorFamily::W66_3;
            expect(beta >= 14 && beta <= 756, "beta range for W66_3");
            expect(a14 == 18166 - 24 * static_cast<uint64_t>(beta), "A14 for W66_3");
            expect(sh.a[5] == 1, "S5 for W66_3");
            expect(sh.a[9] == static_cast<uint64_t>(beta - 14), "S9 for W66_3");
            expect(sh.a[13] == 10123 - 12 * static_cast<uint64_t>(beta), "S13 for W66_3");
        } else {
            res.family = EnumeratorFamily::W66_1;
            expect(smin == 9 || smin == 13, "shadow minimum weight for W66_1");
            expect(beta >= 0 && beta <= 778, "beta range for W66_1");
            expect(a14 == 18678 - 24 * static_cast<uint64_t>(beta), "A14 for W66_1");
            expect(sh.a[9] == static_cast<uint64_t>(beta), "S9 for W66_1");
            expect(sh.a[13] == 10032 - 12 * static_cast<uint64_t>(beta), "S13 for W66_1");
        }
        res.beta = beta;
    }
    return res;
}

} // namespace sdc
