// Micro-benchmark comparing the serial reference kernels with the OpenMP
// variants on the workload that dominates everything else: full 2^k subset
// weight histograms (weight distributions of [64,32] and [128-bit] codes).
//
//   bench_kernels [k] [threads...]
//
// Defaults: k = 26, threads = {1, hardware}.  Prints ns per subset and the
// speedup over the serial walk, and verifies that every variant produces the
// identical histogram.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include <sdc/common.hpp>
#include <sdc/kernels.hpp>

using namespace sdc;

namespace {

using Clock = std::chrono::steady_clock;

double bench_ns_per_step(uint64_t steps, auto&& fn) {
    const auto t0 = Clock::now();
    fn();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return secs * 1e9 / static_cast<double>(steps);
}

} // namespace

int main(int argc, char** argv) {
    const int k = argc > 1 ? std::atoi(argv[1]) : 26;
    if (k < 4 || k > 34) {
        std::fprintf(stderr, "usage: bench_kernels [k in 4..34] [threads...]\n");
        return 2;
    }
    std::vector<int> thread_counts;
    for (int i = 2; i < argc; ++i) thread_counts.push_back(std::atoi(argv[i]));
    if (thread_counts.empty()) thread_counts = {1, thread_count()};

    std::mt19937_64 rng(42);
    std::vector<uint64_t> rows64(k);
    std::vector<Word128> rows128(k);
    for (int i = 0; i < k; ++i) {
        rows64[i] = rng();
        rows128[i] = Word128{rng(), rng()};
    }
    const uint64_t steps = uint64_t{1} << k;

    std::printf("subset weight histogram, k=%d (%llu subsets)\n", k,
                static_cast<unsigned long long>(steps));

    WeightHist ref64{}, ref128{};
    const double ns64 = bench_ns_per_step(
        steps, [&] { ref64 = subset_weight_hist64_serial(rows64, 0); });
    std::printf("  64-bit  serial      %7.2f ns/subset\n", ns64);
    for (int t : thread_counts) {
        WeightHist h{};
        const double ns = bench_ns_per_step(
            steps, [&] { h = subset_weight_hist64(rows64, 0, t); });
        std::printf("  64-bit  %2d thread%s %7.2f ns/subset  (x%.2f)%s\n", t,
                    t == 1 ? " " : "s", ns, ns64 / ns,
                    h == ref64 ? "" : "  MISMATCH");
        if (h != ref64) return 1;
    }

    const double ns128 = bench_ns_per_step(
        steps, [&] { ref128 = subset_weight_hist128_serial(rows128, Word128{}); });
    std::printf("  128-bit serial      %7.2f ns/subset\n", ns128);
    for (int t : thread_counts) {
        WeightHist h{};
        const double ns = bench_ns_per_step(
            steps, [&] { h = subset_weight_hist128(rows128, Word128{}, t); });
        std::printf("  128-bit %2d thread%s %7.2f ns/subset  (x%.2f)%s\n", t,
                    t == 1 ? " " : "s", ns, ns128 / ns,
                    h == ref128 ? "" : "  MISMATCH");
        if (h != ref128) return 1;
    }
    return 0;
}
