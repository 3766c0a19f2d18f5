#include <algorithm>

#include "sdc/kernels.hpp"
#include "sdc/linear_code.hpp"

namespace sdc {

namespace {

// Systematic generator with respect to one information set, plus the number
// of pivot columns reused from earlier sets (the rank deficiency delta of
// the relaxed Brouwer-Zimmermann bound).
struct InfoSet {
    std::vector<Word128> rows;
    int delta = 0;
};

// Greedy disjoint (then overlapping) information sets: each round performs
// Gaussian elimination preferring columns not yet used by earlier sets; a
// round that finds r2 < k fresh pivots completes the basis with used
// columns and records delta = k - r2.
std::vector<InfoSet> build_info_sets(const BitMatrix& basis) {
    const int k = static_cast<int>(basis.rows());
    const int n = static_cast<int>(basis.cols());
    std::vector<bool> used(n, false);
    std::vector<InfoSet> sets;
    int fresh_total = 0;
    while (fresh_total < n) {
        std::vector<BitVector> rows = basis.row_list();
        std::vector<int> pivot_cols;
        int r = 0;
        auto eliminate = [&](int col) {
            int p = r;
            while (p < k && !rows[p].get(col)) ++p;
            if (p == k) return false;
            std::swap(rows[r], rows[p]);
            for (int i = 0; i < k; ++i)
                if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
            pivot_cols.push_back(col);
            ++r;
            return true;
        };
        for (int col = 0; col < n && r < k; ++col)
            if (!used[col]) eliminate(col);
        const int fresh = r;
        if (fresh == 0) break;
        for (int col = 0; col < n && r < k; ++col)
            if (used[col]) eliminate(col);
        if (r < k) break; // cannot happen for a full-rank basis
        InfoSet s;
        s.delta = k - fresh;
        s.rows.resize(k);
        for (int i = 0; i < k; ++i) {
            const auto& w = rows[i].words();
            s.rows[i].lo = w[0];
            s.rows[i].hi = w.size() > 1 ? w[1] : 0;
        }
        sets.push_back(std::move(s));
        for (int i = 0; i < fresh; ++i) used[pivot_cols[i]] = true;
        fresh_total += fresh;
    }
    return sets;
}

// Minimum weight over messages of weight exactly w on one systematic
// generator, aborting early when a word lighter than `bound` cannot exist.
int scan_exact_weight(const InfoSet& s, int w, int best) {
    int k = static_cast<int>(s.rows.size());
    int local = best;
    // DFS over w-subsets of rows.
    std::vector<int> idx(w);
    std::vector<Word128> acc(w + 1);
    acc[0] = Word128{};
    int depth = 0;
    idx[0] = 0;
    while (depth >= 0) {
        if (idx[depth] > k - (w - depth)) {
            --depth;
            if (depth >= 0) ++idx[depth];
            continue;
        }
        acc[depth + 1] = acc[depth] ^ s.rows[idx[depth]];
        if (depth + 1 == w) {
            local = std::min(local, acc[depth + 1].weight());
            ++idx[depth];
        } else {
            ++depth;
            idx[depth] = idx[depth - 1] + 1;
        }
    }
    return local;
}

} // namespace

std::vector<BitVector> codewords_of_weight(const LinearCode& c, int w) {
    const int n = c.n(), k = c.k();
    if (n > 128) throw CodeError(Errc::TooLarge, "word collection supported for n <= 128");
    std::vector<BitVector> out;
    if (w < 1 || w > n) return out;
    auto unpack = [n](Word128 x) {
        BitVector v(n);
        for (int i = 0; i < n && i < 64; ++i)
            if ((x.lo >> i) & 1u) v.set(i);
        for (int i = 64; i < n; ++i)
            if ((x.hi >> (i - 64)) & 1u) v.set(i);
        return v;
    };
    if (k <= 20) {
        const auto rows = c.packed_rows128();
        Word128 acc{};
        const uint64_t total = uint64_t{1} << k;
        for (uint64_t t = 1; t < total; ++t) {
            acc ^= rows[std::countr_zero(t)];
            if (acc.weight() == w) out.push_back(unpack(acc));
        }
    } else if (c.is_self_dual()) {
        // Two systematic generators on complementary information sets: for a
        // self-dual (I | X) basis, X X^T = I, so X^T is X^{-1} and the words
        // with unit restriction to the non-pivot columns form a second basis.
        // Messages of weight <= r on both cover every word of weight <= 2r+1.
        const auto g1 = c.packed_rows128();
        std::vector<Word128> g2;
        std::vector<bool> is_pivot(n, false);
        for (int p : c.pivot_cols()) is_pivot[p - 1] = true;
        for (int col = 0; col < n; ++col) {
            if (is_pivot[col]) continue;
            Word128 word{};
            for (int i = 0; i < k; ++i)
                if (c.standard_basis().get(i, col)) word ^= g1[i];
            g2.push_back(word);
        }
        const int depth = (w + 1) / 2;
        auto visit = [&](Word128 word) {
            if (word.weight() == w) out.push_back(unpack(word));
            return true;
        };
        for_each_low_weight_combo(g1, depth, Word128{}, visit);
        for_each_low_weight_combo(g2, depth, Word128{}, visit);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    } else {
        throw CodeError(Errc::TooLarge,
                        "word collection needs k <= 20 or a self-dual code");
    }
    std::sort(out.begin(), out.end());
    return out;
}

int detail_min_weight(const LinearCode& c) {
    const int n = c.n(), k = c.k();
    if (n > 128) throw CodeError(Errc::TooLarge, "minimum weight supported for n <= 128");
    if (k == n) return 1; // full space contains weight-1 words
    const auto sets = build_info_sets(c.standard_basis());
    int best = n + 1;
    for (int w = 1; w <= k; ++w) {
        for (const auto& s : sets) best = scan_exact_weight(s, w, best);
        long lb = 0;
        for (const auto& s : sets) lb += std::max(0, w + 1 - s.delta);
        if (lb >= best) break;
    }
    return best;
}

} // namespace sdc
