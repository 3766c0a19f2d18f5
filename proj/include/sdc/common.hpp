#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdc {

// Failure categories surfaced to callers (and mapped to CLI exit codes).
enum class Errc {
    BadInput,
    DimensionMismatch,
    NotSelfDual,
    OddWeight,
    NotANeighbor,
    TooLarge,
    Unclassifiable,
    PreconditionFailed,
    NotApplicable,
};

class CodeError : public std::runtime_error {
public:
    CodeError(Errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Errc kind() const { return kind_; }

private:
    Errc kind_;
};

const char* errc_name(Errc kind);

// Global worker-thread count used by the parallel kernels.  Initialised from
// the SDCODE_THREADS environment variable (falling back to the OpenMP
// default) the first time it is queried.
int thread_count();
void set_thread_count(int threads);

} // namespace sdc
