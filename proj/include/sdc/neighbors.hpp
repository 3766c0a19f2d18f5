#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdc/linear_code.hpp"

namespace sdc {

// Portable recipe for a neighbor: parent identifier plus supp(x), 1-based.
struct NeighborDescriptor {
    std::string parent;
    std::vector<int> support;

    std::string to_line() const;                       // "parent:c1,c2,..."
    static NeighborDescriptor from_line(std::string_view line);
    bool operator==(const NeighborDescriptor&) const = default;
};

// Self-dual neighbor <(C n <x>^perp), x> of a self-dual code C for an
// even-weight x outside C.
LinearCode neighbor(const LinearCode& c, const BitVector& x);

// The two doubly even self-dual neighbors C0 u C1 and C0 u C3 of a singly
// even self-dual code with n == 0 (mod 8); the first component is the one
// built from the shadow half with the lexicographically smaller minimal
// member.
std::pair<LinearCode, LinearCode> doubly_even_neighbors(const LinearCode& c);

struct Weight10Elimination {
    BitVector x;            // even-weight solution of M x^T = 1^T, reduced mod c
    bool unique_mod_code;   // the even-weight solution set is exactly x + C
    LinearCode c0;          // C n <x>^perp
    LinearCode d1, d2;      // the two neighbors <C0, x> and <C0, x + u>, u in C \ C0
};

// Solve M x^T = 1^T where the rows of M are all weight-10 codewords of a
// self-dual code with minimum weight 10 (Eq.-style elimination).  Empty when
// no even-weight solution exists.
std::optional<Weight10Elimination> weight10_neighbor_vector(const LinearCode& c);

enum class NeighborMode { Targeted, Bounded, Random };

struct NeighborSearchOptions {
    NeighborMode mode = NeighborMode::Targeted;
    std::vector<std::vector<int>> supports; // Targeted: explicit support lists
    int w_max = 14;                         // Bounded: max weight of x
    int min_d = 0;                          // keep only neighbors with min weight >= min_d
    uint64_t budget = 0;                    // Bounded/Random: max vectors tried (0 = all / required for Random)
    uint64_t seed = 1;                      // Random
    bool fingerprint_dedup = true;          // drop repeats of an earlier fingerprint
};

struct NeighborRecord {
    BitVector x;
    LinearCode code;
};

// Distinct self-dual neighbors of c produced by the requested mode:
// Targeted replays explicit supports; Bounded walks even-weight x of weight
// <= w_max, one representative per coset of c (syndrome-deduplicated);
// Random samples seeded even-weight x.  Exact duplicates (same code) are
// always dropped; with fingerprint_dedup, later codes matching an earlier
// fingerprint are dropped too.
std::vector<NeighborRecord> enumerate_neighbors(const LinearCode& c,
                                                const NeighborSearchOptions& opts);

} // namespace sdc
