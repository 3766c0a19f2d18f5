#include "sdc/common.hpp"

#include <atomic>
#include <cstdlib>

#include <omp.h>

namespace sdc {

const char* errc_name(Errc kind) {
    switch (kind) {
    case Errc::BadInput: return "BadInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::OddWeight: return "OddWeight";
    case Errc::NotANeighbor: return "NotANeighbor";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Unclassifiable: return "Unclassifiable";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
}

namespace {
std::atomic<int> g_threads{0};

int initial_threads() {
    if (const char* env = std::getenv("SDCODE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return omp_get_max_threads();
}
} // namespace

int thread_count() {
    int v = g_threads.load(std::memory_order_relaxed);
    if (v == 0) {
        v = initial_threads();
        g_threads.store(v, std::memory_order_relaxed);
    }
    return v;
}

void set_thread_count(int threads) {
    if (threads < 1) throw CodeError(Errc::BadInput, "thread count must be >= 1");
    g_threads.store(threads, std::memory_order_relaxed);
}

} // namespace sdc
