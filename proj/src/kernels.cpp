#include "sdc/kernels.hpp"

#include <bit>

#include <omp.h>

#include "sdc/common.hpp"

namespace sdc {

int Word128::weight() const { return std::popcount(lo) + std::popcount(hi); }

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : thread_count(); }

void check_k(std::size_t k) {
    if (k > 62) throw CodeError(Errc::TooLarge, "subset sweep limited to 62 rows");
}

inline int weight_of(uint64_t w) { return std::popcount(w); }
inline int weight_of(Word128 w) { return w.weight(); }

// Gray-code walk over all 2^m subsets of rows[0..m), starting from `start`
// (the word for the empty subset), accumulating the weight histogram.
// The walk visits subset gray(i) at step i; step i flips row ctz(i).
template <typename Word>
inline void gray_histogram(const Word* rows, int m, Word start, uint64_t* hist) {
    Word acc = start;
    if (m == 0) {
        ++hist[weight_of(acc)];
        return;
    }
    // Odd steps always flip row 0; even steps flip row ctz(t)+1.  Splitting
    // the counts over two local histograms shortens the dependency chain.
    uint64_t h0[129] = {0}, h1[129] = {0};
    ++h0[weight_of(acc)];
    const uint64_t half = uint64_t{1} << (m - 1);
    for (uint64_t t = 1; t < half; ++t) {
        acc ^= rows[0];
        ++h1[weight_of(acc)];
        acc ^= rows[std::countr_zero(t) + 1];
        ++h0[weight_of(acc)];
    }
    acc ^= rows[0];
    ++h1[weight_of(acc)];
    for (int w = 0; w < 129; ++w) hist[w] += h0[w] + h1[w];
}

// Word for the subset gray(base) where base = chunk << m: XOR of the rows
// selected by the high bits of the Gray code of base.
template <typename Word>
inline Word chunk_start(const std::vector<Word>& rows, int m, uint64_t chunk, Word start) {
    uint64_t base = chunk << m;
    uint64_t g = base ^ (base >> 1);
    Word acc = start;
    while (g) {
        int b = std::countr_zero(g);
        acc ^= rows[b];
        g &= g - 1;
    }
    return acc;
}

template <typename Word>
WeightHist hist_serial(const std::vector<Word>& rows, Word start) {
    check_k(rows.size());
    WeightHist hist{};
    // Reference implementation: one plain Gray walk over all 2^k subsets.
    Word acc = start;
    ++hist[weight_of(acc)];
    const int k = static_cast<int>(rows.size());
    if (k == 0) return hist;
    const uint64_t total = uint64_t{1} << k;
    for (uint64_t i = 1; i < total; ++i) {
        acc ^= rows[std::countr_zero(i)];
        ++hist[weight_of(acc)];
    }
    return hist;
}

template <typename Word>
WeightHist hist_parallel(const std::vector<Word>& rows, Word start, int threads) {
    check_k(rows.size());
    const int k = static_cast<int>(rows.size());
    const int nt = resolve_threads(threads);
    if (k <= 20 || nt == 1) {
        WeightHist hist{};
        gray_histogram(rows.data(), k, start, hist.data());
        return hist;
    }
    // Chunk the walk: high t bits select the chunk, each chunk walks 2^m
    // subsets.  Per-chunk histograms are summed in chunk order, so the
    // result is independent of the thread count.
    const int t = std::min(10, k - 16);
    const int m = k - t;
    const uint64_t chunks = uint64_t{1} << t;
    std::vector<WeightHist> part(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
        part[c] = WeightHist{};
        gray_histogram(rows.data(), m, chunk_start(rows, m, c, start), part[c].data());
    }
    WeightHist hist{};
    for (const auto& p : part)
        for (int w = 0; w < 129; ++w) hist[w] += p[w];
    return hist;
}

int min_from_hist(const WeightHist& h) {
    for (int w = 1; w < 129; ++w)
        if (h[w]) return w;
    throw CodeError(Errc::PreconditionFailed, "sweep saw only the zero word");
}

} // namespace

WeightHist subset_weight_hist64_serial(const std::vector<uint64_t>& rows, uint64_t start) {
    return hist_serial(rows, start);
}

WeightHist subset_weight_hist64(const std::vector<uint64_t>& rows, uint64_t start, int threads) {
    return hist_parallel(rows, start, threads);
}

WeightHist subset_weight_hist128_serial(const std::vector<Word128>& rows, Word128 start) {
    return hist_serial(rows, start);
}

WeightHist subset_weight_hist128(const std::vector<Word128>& rows, Word128 start, int threads) {
    return hist_parallel(rows, start, threads);
}

int subset_min_weight64(const std::vector<uint64_t>& rows, uint64_t start, int threads) {
    return min_from_hist(hist_parallel(rows, start, threads));
}

int subset_min_weight128(const std::vector<Word128>& rows, Word128 start, int threads) {
    return min_from_hist(hist_parallel(rows, start, threads));
}

} // namespace sdc
