#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdc/linear_code.hpp"

namespace sdc {

// First row of an order-n circulant matrix.
struct CirculantRow {
    int order = 0;
    uint32_t bits = 0; // coordinate i of the row = bit i

    CirculantRow() = default;
    CirculantRow(int n, uint32_t b);
    static CirculantRow from_string(std::string_view s); // "(0100...)" or "0100..."

    bool get(int i) const { return (bits >> i) & 1u; }
    int weight() const;
    std::string to_string() const;
    bool operator==(const CirculantRow&) const = default;
    bool operator<(const CirculantRow& o) const;
};

BitMatrix circulant(const CirculantRow& r);

// Autocorrelation vector, length n: coordinate s = parity of r & rot(r, s),
// i.e. the first row of R R^T for R = circulant(r).  Coordinate 0 is
// weight(r) mod 2 and the vector is symmetric under s <-> n - s.
BitVector autocorrelation(const CirculantRow& r);

// A A^T + B B^T == I for the circulants of ra and rb; this is exactly the
// self-duality condition of the four-circulant code.
bool is_self_dual_pair(const CirculantRow& ra, const CirculantRow& rb);

// [4n, 2n] code with generator (I | A B ; B^T A^T).  With require_self_dual
// the pair condition is checked up front (NotSelfDual otherwise).
LinearCode four_circulant_code(const CirculantRow& ra, const CirculantRow& rb,
                               bool require_self_dual = false);

struct FourCirculantPair {
    CirculantRow ra, rb;
    bool operator<(const FourCirculantPair& o) const {
        return ra < o.ra || (ra == o.ra && rb < o.rb);
    }
    bool operator==(const FourCirculantPair&) const = default;
};

struct FourCirculantClass {
    FourCirculantPair rep;            // lexicographically first surviving orbit
    std::vector<FourCirculantPair> members; // surviving pair orbits in the class
    LinearCode code;                  // code of rep
};

struct SearchOptions {
    int threads = 0;               // 0 = global default
    std::string state_file;        // optional resume checkpoint
    bool progress = false;         // progress lines on stderr
};

struct SearchResult {
    int order = 0;
    std::vector<int> target_d;
    // classes[d] lists the inequivalent codes with that minimum weight,
    // ordered by representative pair.
    std::vector<std::pair<int, std::vector<FourCirculantClass>>> classes;
    uint64_t candidates_scanned = 0; // pairs that passed the cheap filters
    uint64_t survivors = 0;          // pair orbits with a target minimum weight
};

// Exhaustive-up-to-equivalence search over self-dual four-circulant pairs of
// the given order (<= 16) for singly even codes of the target minimum
// weights.  Pairs are filtered by weight(ra) + weight(rb) == 1 (mod 4)
// (which forces singly even) and a weight-sum threshold: 13 once the order
// can reach it (2*order >= 13), else min(d) - 1 (generator rows have weight
// 1 + weight(ra) + weight(rb)).  Four transformations of a pair are known to
// preserve code equivalence -- cyclic shifts of either row, swapping the two
// rows, and reflecting both rows -- so candidates are reduced to one
// canonical representative per orbit of that symmetry group before the
// expensive minimum-weight classification and equivalence partitioning.
SearchResult search_four_circulant(int order, std::vector<int> target_d,
                                   const SearchOptions& opts = {});

} // namespace sdc
