#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "sdc/linear_code.hpp"

namespace sdc {

enum class BoundMethod { Delsarte, Exact };

struct CoveringCertificate {
    int upper = 0;
    BoundMethod upper_method = BoundMethod::Delsarte;
    int lower = 0;
    BitVector witness;            // coset representative with leader weight == lower
    std::optional<int> conclusion; // set iff lower == upper

    std::string to_report() const;
};

// External-distance bound: number of distinct nonzero weights of the dual
// code (a self-dual code uses its own distribution).
int delsarte_bound(const LinearCode& c);

// Minimum weight of v + C by Gray-code sweep over all codewords; k <= 34.
int coset_min_weight(const LinearCode& c, const BitVector& v);

// Exact covering radius via BFS over syndrome space; requires n - k <= 32
// and 2^{n-k} bytes within memory_budget.
int covering_radius_exact(const LinearCode& c, uint64_t memory_budget = uint64_t{1} << 30);

// For a singly even self-dual [64,32,12] code whose shadow has minimum
// weight 12: certify covering radius 12 for both doubly even neighbors
// (Delsarte upper + coset-witness lower).
std::pair<CoveringCertificate, CoveringCertificate> certify_cr12(const LinearCode& c_se);

} // namespace sdc
