#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <sdc/bitvec.hpp>
#include <sdc/gf2.hpp>
#include <sdc/linear_code.hpp>

namespace sdc::test {

using Rng = std::mt19937_64;

// Shorthand for building a code from generator row strings.
inline LinearCode code_from(const std::vector<std::string>& rows) {
    return LinearCode::from_rows(BitMatrix::from_strings(rows));
}

inline BitVector random_vector(Rng& rng, int n) {
    BitVector v(n);
    for (int i = 0; i < n; ++i)
        if (rng() & 1) v.set(i);
    return v;
}

// Random [n, k] code: random rows, retried until the rank is k.
inline LinearCode random_code(Rng& rng, int n, int k) {
    for (;;) {
        BitMatrix m(0, n);
        for (int i = 0; i < k; ++i) m.append_row(random_vector(rng, n));
        if (rank(m) == k) return LinearCode(m);
    }
}

// Random self-dual [n, n/2]: (I | A) with A orthogonal, built as a product
// of transvections x -> x + <x,v> v for even-weight v (each preserves the
// inner product), applied to the identity.
inline LinearCode random_self_dual(Rng& rng, int n) {
    const int h = n / 2;
    BitMatrix a = BitMatrix::identity(h);
    const int steps = 2 * h + 8;
    for (int s = 0; s < steps; ++s) {
        BitVector v = random_vector(rng, h);
        if (v.weight() % 2) v.flip(static_cast<int>(rng() % h));
        if (v.weight() == 0) continue;
        for (int i = 0; i < h; ++i)
            if (a.row(i).dot(v)) a.xor_row(i, v);
    }
    BitMatrix g(0, n);
    for (int i = 0; i < h; ++i) {
        BitVector row(n);
        row.set(i);
        for (int j = 0; j < h; ++j)
            if (a.get(i, j)) row.set(h + j);
        g.append_row(row);
    }
    return LinearCode(g);
}

// All 2^k codewords (k <= 20).
inline std::vector<BitVector> all_codewords(const LinearCode& c) {
    const auto& rows = c.generator().row_list();
    std::vector<BitVector> words{BitVector(c.n())};
    for (const BitVector& r : rows) {
        const std::size_t sz = words.size();
        for (std::size_t i = 0; i < sz; ++i) words.push_back(words[i] ^ r);
    }
    return words;
}

// Brute-force equivalence oracle: depth-first search for a coordinate
// bijection, pruning on multisets of codeword restrictions to the chosen
// prefix.  Independent of the canonical-form machinery.  n <= 14.
inline bool bf_equivalent(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.k() != b.k()) return false;
    const int n = a.n();
    const std::vector<BitVector> wa = all_codewords(a), wb = all_codewords(b);
    const std::size_t m = wa.size();

    // prefix profile: sorted vector of the first i chosen coordinates of
    // every codeword, as integers
    std::vector<uint32_t> pa(m, 0), pb(m, 0);
    std::vector<int> sigma(n, -1);      // a-coordinate i <- b-coordinate sigma[i]
    std::vector<bool> used(n, false);

    auto profile_ok = [&](int depth) {
        std::vector<uint32_t> qa(m), qb(m);
        for (std::size_t w = 0; w < m; ++w) {
            uint32_t va = 0, vb = 0;
            for (int i = 0; i <= depth; ++i) {
                va = (va << 1) | wa[w].get(i);
                vb = (vb << 1) | wb[w].get(sigma[i]);
            }
            qa[w] = va;
            qb[w] = vb;
        }
        std::sort(qa.begin(), qa.end());
        std::sort(qb.begin(), qb.end());
        return qa == qb;
    };

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            sigma[depth] = j;
            used[j] = true;
            if (profile_ok(depth) && self(self, depth + 1)) return true;
            used[j] = false;
        }
        sigma[depth] = -1;
        return false;
    };
    return dfs(dfs, 0);
}

// Extended Hamming [8,4,4] (doubly even self-dual).
inline LinearCode e8() {
    return LinearCode(BitMatrix::from_strings({
        "10000111",
        "01001011",
        "00101101",
        "00011110",
    }));
}

// n/2 copies of the repetition code {00, 11}.
inline LinearCode i2n(int n) {
    BitMatrix g(0, n);
    for (int i = 0; i < n / 2; ++i) {
        BitVector row(n);
        row.set(2 * i);
        row.set(2 * i + 1);
        g.append_row(row);
    }
    return LinearCode(g);
}

// Extended binary Golay [24,12,8]: cyclic [23,12,7] from the generator
// polynomial 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11, plus a parity bit.
inline LinearCode golay24() {
    const std::vector<int> gpoly = {0, 2, 4, 5, 6, 10, 11};
    BitMatrix g(0, 24);
    for (int i = 0; i < 12; ++i) {
        BitVector row(24);
        for (int e : gpoly) row.set(i + e);
        int w = row.weight();
        if (w % 2) row.set(23);
        g.append_row(row);
    }
    return LinearCode(g);
}

} // namespace sdc::test
