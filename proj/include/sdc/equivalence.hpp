#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdc/linear_code.hpp"

namespace sdc {

// Permutation-invariant precheck data.  Equal for equivalent codes; cheap to
// compare.  Inequality proves inequivalence, equality decides nothing.
struct Fingerprint {
    int n = 0, k = 0, d = 0;
    uint64_t a_d = 0, a_d2 = 0;          // A_d and A_{d+2}
    std::vector<uint32_t> incidence;      // sorted per-coordinate counts over weight-d words
    std::vector<uint32_t> intersections;  // |supp n supp| histogram over weight-d word pairs
    bool sampled = false;                 // intersections from a capped seeded sample

    // Comparison goes through bytes(): a sampled intersection histogram is
    // not permutation-invariant, so it never participates.
    bool operator==(const Fingerprint& o) const;
    bool operator<(const Fingerprint& o) const;
    std::string bytes() const;
};

Fingerprint fingerprint(const LinearCode& c);

// Canonical form: generator bytes of the permuted code selected by canonical
// labeling of the coordinates-vs-words incidence graph.  Equal hex iff the
// codes are permutation equivalent.
struct CanonicalForm {
    std::string bytes;
    std::string hex() const;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

CanonicalForm canonical_form(const LinearCode& c);

bool are_equivalent(const LinearCode& c1, const LinearCode& c2);

// Indices of the input grouped into equivalence classes.  Within a class,
// input order is kept; classes are ordered by canonical form.
std::vector<std::vector<int>> partition_classes(const std::vector<LinearCode>& codes);

} // namespace sdc
