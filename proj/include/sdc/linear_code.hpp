#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdc/bitvec.hpp"
#include "sdc/gf2.hpp"
#include "sdc/kernels.hpp"
#include "sdc/weights.hpp"

namespace sdc {

enum class ParityClass { DoublyEven, SinglyEven, NotSelfOrthogonalEven };

// Binary linear [n, k] code, held as a generator basis.  Immutable; copies
// share a lazily filled cache (minimum weight, weight distribution, ...), so
// passing codes around by value keeps previously computed results.
class LinearCode {
public:
    // Rows must be linearly independent.
    explicit LinearCode(const BitMatrix& generator);
    // Reduces arbitrary rows to a basis first; throws BadInput on rank 0.
    static LinearCode from_rows(const BitMatrix& rows);

    int n() const { return n_; }
    int k() const { return k_; }

    // Generator as given at construction.
    const BitMatrix& generator() const { return gen_; }
    // Reduced row echelon basis (the canonical basis used for equality).
    const BitMatrix& standard_basis() const { return std_; }
    const std::vector<int>& pivot_cols() const { return pivots_; } // 1-based

    bool contains(const BitVector& v) const;
    // Reduce v modulo the code by clearing the pivot coordinates; the result
    // is the lexicographically smallest member of v + C.
    BitVector reduce(const BitVector& v) const;

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && std_ == o.std_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }
    // Byte serialization of (n, k, standard basis); usable as a map key.
    std::string basis_bytes() const;

    bool is_self_orthogonal() const;
    bool is_self_dual() const;

    // perm maps old coordinate i (0-based) to new coordinate perm[i].
    LinearCode permuted(const std::vector<int>& perm) const;

    // Minimum nonzero weight, by information-set enumeration; exact.
    int min_weight() const;
    // Full weight distribution by codeword enumeration; throws TooLarge when
    // k exceeds budget_k.
    const WeightDistribution& weight_distribution(int budget_k = 34) const;

    // Generator rows packed into machine words (n <= 64 / n <= 128).
    std::vector<uint64_t> packed_rows64() const;
    std::vector<Word128> packed_rows128() const;

private:
    int n_ = 0, k_ = 0;
    BitMatrix gen_;
    BitMatrix std_;
    std::vector<int> pivots_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

struct ShadowReport {
    // Coset representatives of the two shadow halves S = C1 u C3, ordered by
    // the lexicographically smallest member of each half (C1 first).
    BitVector rep_c1;
    BitVector rep_c3;
    WeightDistribution distribution;
    int min_weight = 0;
};

// All codewords of exact weight w, sorted.  Complete by construction: full
// enumeration for k <= 20, otherwise two complementary information sets of a
// self-dual code cover every word of weight <= w.  Throws TooLarge when
// neither route applies.
std::vector<BitVector> codewords_of_weight(const LinearCode& c, int w);

// Basis of c n <x>^perp (dimension k-1) together with one basis codeword
// outside the subcode; requires some codeword not orthogonal to x.
std::pair<BitMatrix, BitVector> orthogonal_split(const LinearCode& c, const BitVector& x);

LinearCode dual(const LinearCode& c);
ParityClass parity_class(const LinearCode& c); // requires self-dual
// Doubly even subcode C0 of a singly even self-dual code (index 2).
LinearCode doubly_even_subcode(const LinearCode& c);
ShadowReport shadow(const LinearCode& c);

enum class EnumeratorFamily { W64_1, W64_2, W66_1, W66_2, W66_3 };

struct EnumeratorClass {
    EnumeratorFamily family;
    std::optional<int> beta; // absent for the parameter-free W66_2
};

const char* family_name(EnumeratorFamily f);

// Identify the weight-enumerator family (and beta) of an extremal singly
// even self-dual code of length 64 or 66; throws Unclassifiable otherwise.
EnumeratorClass classify_enumerator(const LinearCode& c);

} // namespace sdc
