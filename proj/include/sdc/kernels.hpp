#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sdc/bitvec.hpp"

namespace sdc {

// Weight histogram for words of length <= 128; index = weight.
using WeightHist = std::array<uint64_t, 129>;

struct Word128 {
    uint64_t lo = 0, hi = 0;
    Word128 operator^(Word128 o) const { return {lo ^ o.lo, hi ^ o.hi}; }
    void operator^=(Word128 o) { lo ^= o.lo; hi ^= o.hi; }
    int weight() const;
    bool operator==(const Word128&) const = default;
};

// Weight histogram of { start + sum of a subset of rows } over all 2^k
// subsets (k = rows.size(), k <= 62).  The *_serial variants are the
// straightforward Gray-code walk and serve as the reference implementation;
// the unsuffixed ones chunk the walk and run the chunks on OpenMP threads,
// summing per-chunk histograms in fixed order so the result is identical for
// any thread count.
WeightHist subset_weight_hist64_serial(const std::vector<uint64_t>& rows, uint64_t start);
WeightHist subset_weight_hist64(const std::vector<uint64_t>& rows, uint64_t start, int threads);
WeightHist subset_weight_hist128_serial(const std::vector<Word128>& rows, Word128 start);
WeightHist subset_weight_hist128(const std::vector<Word128>& rows, Word128 start, int threads);

// Minimum weight over the same set, excluding the empty subset when start is
// zero (i.e. the zero word never counts).
int subset_min_weight64(const std::vector<uint64_t>& rows, uint64_t start, int threads);
int subset_min_weight128(const std::vector<Word128>& rows, Word128 start, int threads);

// Visit start ^ (xor of every non-empty subset of rows of size <= max_take),
// depth-first, smallest indices first.  f(word) returning false aborts the
// walk; returns false when aborted.
template <typename Word, typename F>
bool for_each_low_weight_combo(const std::vector<Word>& rows, int max_take, Word start, F&& f) {
    const int k = static_cast<int>(rows.size());
    // Explicit recursion over combinations; depth is tiny (max_take <= 8).
    struct Rec {
        const std::vector<Word>& rows;
        int k, max_take;
        F& f;
        bool run(int from, int depth, Word acc) {
            for (int i = from; i < k; ++i) {
                Word nxt = acc ^ rows[i];
                if (!f(nxt)) return false;
                if (depth + 1 < max_take)
                    if (!run(i + 1, depth + 1, nxt)) return false;
            }
            return true;
        }
    } rec{rows, k, max_take, f};
    if (max_take <= 0) return true;
    return rec.run(0, 0, start);
}

} // namespace sdc
