#include "sdc/covering.hpp"

#include <sstream>
#include <vector>

#include "sdc/neighbors.hpp"

namespace sdc {

std::string CoveringCertificate::to_report() const {
    std::ostringstream os;
    os << "upper " << upper
       << (upper_method == BoundMethod::Delsarte ? " (external distance)" : " (exact)")
       << ", lower " << lower << " (coset of " << witness.to_hex() << ")";
    if (conclusion)
        os << "; covering radius = " << *conclusion;
    else
        os << "; covering radius in [" << lower << ", " << upper << "]";
    return os.str();
}

int delsarte_bound(const LinearCode& c) {
    WeightDistribution dd;
    if (c.is_self_dual())
        dd = c.weight_distribution();
    else if (c.k() <= c.n() - c.k())
        dd = macwilliams_transform(c.weight_distribution(), c.k());
    else
        dd = dual(c).weight_distribution();
    int s = 0;
    for (int w = 1; w <= dd.n; ++w)
        if (dd.a[static_cast<std::size_t>(w)] != 0) ++s;
    return s;
}

int coset_min_weight(const LinearCode& c, const BitVector& v) {
    if (v.size() != static_cast<std::size_t>(c.n()))
        throw CodeError(Errc::DimensionMismatch, "coset vector length differs from code length");
    if (c.contains(v)) return 0;
    if (c.k() > 34)
        throw CodeError(Errc::TooLarge, "coset sweep needs k <= 34");
    if (c.n() <= 64)
        return subset_min_weight64(c.packed_rows64(), v.word(0), thread_count());
    if (c.n() <= 128) {
        Word128 start{v.word(0), v.word_count() > 1 ? v.word(1) : 0};
        return subset_min_weight128(c.packed_rows128(), start, thread_count());
    }
    throw CodeError(Errc::TooLarge, "coset sweep needs n <= 128");
}

int covering_radius_exact(const LinearCode& c, uint64_t memory_budget) {
    const int r = c.n() - c.k();
    if (r == 0) return 0;
    if (r > 32 || (uint64_t{1} << r) > memory_budget)
        throw CodeError(Errc::TooLarge, "syndrome table exceeds the memory budget");
    const LinearCode d = dual(c);
    const BitMatrix& h = d.standard_basis();
    const int n = c.n();
    std::vector<uint32_t> colsyn(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j)
            if (h.get(static_cast<std::size_t>(j), static_cast<std::size_t>(i)))
                colsyn[static_cast<std::size_t>(i)] |= uint32_t{1} << j;
    const uint64_t space = uint64_t{1} << r;
    std::vector<uint8_t> dist(space, 0xff);
    dist[0] = 0;
    uint64_t assigned = 1;
    // Level sweep in weight order; the covering radius of an [n, k] code is
    // at most n - k <= 32, so a byte per syndrome suffices.
    for (int level = 0; assigned < space; ++level) {
        for (uint64_t s = 0; s < space; ++s) {
            if (dist[s] != level) continue;
            for (int i = 0; i < n; ++i) {
                const uint64_t t = s ^ colsyn[static_cast<std::size_t>(i)];
                if (dist[t] == 0xff) {
                    dist[t] = static_cast<uint8_t>(level + 1);
                    ++assigned;
                }
            }
        }
    }
    int cr = 0;
    for (uint64_t s = 0; s < space; ++s) cr = std::max(cr, static_cast<int>(dist[s]));
    return cr;
}

std::pair<CoveringCertificate, CoveringCertificate> certify_cr12(const LinearCode& c_se) {
    auto fail = [](const char* msg) -> void { throw CodeError(Errc::PreconditionFailed, msg); };
    if (c_se.n() != 64 || c_se.k() != 32) fail("certificate expects a [64,32] code");
    if (!c_se.is_self_dual()) fail("certificate expects a self-dual code");
    if (parity_class(c_se) != ParityClass::SinglyEven) fail("certificate expects a singly even code");
    if (c_se.min_weight() != 12) fail("certificate expects minimum weight 12");
    if (shadow(c_se).min_weight != 12) fail("certificate expects shadow minimum weight 12");

    BitVector y2;
    for (std::size_t i = 0; i < c_se.standard_basis().rows(); ++i) {
        const BitVector& row = c_se.standard_basis().row(i);
        if (row.weight() % 4 == 2) {
            y2 = row;
            break;
        }
    }

    auto certify = [&](const LinearCode& d) {
        CoveringCertificate cert;
        cert.upper = delsarte_bound(d);
        cert.upper_method = BoundMethod::Delsarte;
        cert.lower = coset_min_weight(d, y2);
        cert.witness = y2;
        if (cert.lower == cert.upper) cert.conclusion = cert.upper;
        return cert;
    };
    const auto [d1, d2] = doubly_even_neighbors(c_se);
    return {certify(d1), certify(d2)};
}

} // namespace sdc
