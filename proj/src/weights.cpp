#include "sdc/weights.hpp"

#include <array>

namespace sdc {

namespace {

constexpr int kMaxN = 128;

// Pascal's triangle; C(128,64) exceeds 64 bits, but every value used here is
// C(n,j) with n <= 66, all of which fit (C(66,33) < 2^63).  Entries that
// would overflow are saturated and must never be read.
const std::array<std::array<uint64_t, kMaxN + 1>, kMaxN + 1>& binomials() {
    static const auto table = [] {
        std::array<std::array<uint64_t, kMaxN + 1>, kMaxN + 1> c{};
        for (int i = 0; i <= kMaxN; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j) {
                uint64_t a = c[i - 1][j - 1], b = j <= i - 1 ? c[i - 1][j] : 0;
                uint64_t s = a + b;
                if (s < a) s = ~uint64_t{0}; // saturate
                c[i][j] = s;
            }
        }
        return c;
    }();
    return table;
}

} // namespace

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (uint64_t x : a) t += x;
    return t;
}

int WeightDistribution::min_nonzero() const {
    for (int w = 1; w <= n; ++w)
        if (a[w]) return w;
    return -1;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, int k) {
    const int n = w.n;
    if (n < 1 || n > 66)
        throw CodeError(Errc::TooLarge, "MacWilliams transform supported for n <= 66");
    if (k < 0 || k > n) throw CodeError(Errc::BadInput, "bad dimension");
    const auto& C = binomials();
    WeightDistribution out(n);
    for (int j = 0; j <= n; ++j) {
        // Krawtchouk K_j(i) = sum_t (-1)^t C(i,t) C(n-i, j-t); |partial| <= C(n,j).
        __int128 sum = 0;
        for (int i = 0; i <= n; ++i) {
            if (!w.a[i]) continue;
            __int128 kr = 0;
            for (int t = 0; t <= j; ++t) {
                if (t > i || j - t > n - i) continue;
                __int128 term = static_cast<__int128>(C[i][t]) * C[n - i][j - t];
                kr += (t & 1) ? -term : term;
            }
            sum += static_cast<__int128>(w.a[i]) * kr;
        }
        __int128 denom = static_cast<__int128>(1) << k;
        if (sum < 0 || sum % denom != 0)
            throw CodeError(Errc::BadInput,
                            "distribution is not that of a dimension-k code (transform not integral)");
        __int128 v = sum / denom;
        if (v > static_cast<__int128>(~uint64_t{0}))
            throw CodeError(Errc::TooLarge, "transform coefficient overflow");
        out.a[j] = static_cast<uint64_t>(v);
    }
    return out;
}

WeightDistribution shadow_distribution(const WeightDistribution& w, int k) {
    const int n = w.n;
    for (int i = 0; i <= n; ++i)
        if (w.a[i] && i % 2 != 0)
            throw CodeError(Errc::PreconditionFailed, "shadow requires an even code");
    WeightDistribution c0(n);
    uint64_t kept = 0;
    for (int i = 0; i <= n; i += 4) {
        c0.a[i] = w.a[i];
        kept += w.a[i];
    }
    if (w.total() != (uint64_t{1} << k))
        throw CodeError(Errc::PreconditionFailed, "distribution total is not 2^k");
    if (kept != (uint64_t{1} << (k - 1)))
        throw CodeError(Errc::PreconditionFailed,
                        "doubly even subcode does not have index 2 (code not singly even)");
    WeightDistribution dual0 = macwilliams_transform(c0, k - 1);
    WeightDistribution s(n);
    for (int i = 0; i <= n; ++i) {
        if (dual0.a[i] < w.a[i])
            throw CodeError(Errc::PreconditionFailed, "C0-dual does not contain C");
        s.a[i] = dual0.a[i] - w.a[i];
    }
    return s;
}

int rains_bound(int n) {
    if (n < 2 || n % 2 != 0) throw CodeError(Errc::BadInput, "length must be even and positive");
    int d = 4 * (n / 24) + 4;
    if (n % 24 == 22) d += 2;
    return d;
}

} // namespace sdc
