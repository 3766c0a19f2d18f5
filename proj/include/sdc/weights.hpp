#pragma once

#include <cstdint>
#include <vector>

#include "sdc/common.hpp"

namespace sdc {

// Weight distribution A_0..A_n of a length-n code (or of a coset / shadow).
struct WeightDistribution {
    int n = 0;
    std::vector<uint64_t> a; // size n+1

    WeightDistribution() = default;
    explicit WeightDistribution(int len) : n(len), a(len + 1, 0) {}

    uint64_t total() const;
    int min_nonzero() const; // smallest w >= 1 with a[w] > 0; -1 if none
    bool operator==(const WeightDistribution&) const = default;
};

// MacWilliams transform of the distribution of a k-dimensional length-n
// code: the dual distribution, computed exactly over 128-bit integers.
WeightDistribution macwilliams_transform(const WeightDistribution& w, int k);

// Shadow distribution of a singly even self-dual code of length n = 2k given
// its weight distribution: drop the weights == 2 (mod 4), transform the
// doubly even subcode, subtract.  Exact; throws PreconditionFailed when the
// input is not the distribution of a singly even self-dual code.
WeightDistribution shadow_distribution(const WeightDistribution& w, int k);

// Largest possible minimum weight of a self-dual code of even length n:
// 4*floor(n/24) + 4, plus 2 when n == 22 (mod 24).
int rains_bound(int n);

} // namespace sdc
