#include "sdc/extend.hpp"

#include <utility>

namespace sdc {

std::string ExtensionRecipe::to_line() const { return parent + ":" + x.to_string(); }

ExtensionRecipe ExtensionRecipe::from_line(std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
        throw CodeError(Errc::BadInput, "extension recipe needs 'parent:bitstring'");
    ExtensionRecipe r;
    r.parent = std::string(line.substr(0, colon));
    r.x = BitVector::from_string(line.substr(colon + 1));
    return r;
}

CosetSplit split_cosets(const LinearCode& c, const BitVector& x) {
    if (x.size() != static_cast<std::size_t>(c.n()))
        throw CodeError(Errc::DimensionMismatch, "x length differs from code length");
    if (!c.is_self_dual())
        throw CodeError(Errc::NotSelfDual, "coset split requires a self-dual code");
    if (x.weight() % 2 == 0)
        throw CodeError(Errc::OddWeight, "the splitting vector must have odd weight");
    // Odd-weight x is never in C (codewords are even) and never orthogonal to
    // all of C = C^perp, so C0 = C n <x>^perp has codimension 1 in C.
    auto [rows, outside] = orthogonal_split(c, x);
    LinearCode c0(rows);
    BitVector rep_c2 = c0.reduce(outside);
    // C1 is the C0-coset of x itself, C3 the other half of x + C; this keeps
    // the split invariant under x -> x + w for w in C0.
    BitVector r1 = c0.reduce(x), r3 = c0.reduce(x ^ outside);
    return CosetSplit{std::move(c0), std::move(rep_c2), std::move(r1), std::move(r3)};
}

LinearCode tsai_extend(const LinearCode& c, const BitVector& x) {
    const CosetSplit split = split_cosets(c, x);
    const int n = c.n();
    auto prefixed = [n](bool b1, bool b2, const BitVector& tail) {
        BitVector v(static_cast<std::size_t>(n) + 2);
        if (b1) v.set(0);
        if (b2) v.set(1);
        for (int i = 0; i < n; ++i)
            if (tail.get(i)) v.set(static_cast<std::size_t>(i) + 2);
        return v;
    };
    BitMatrix rows(0, static_cast<std::size_t>(n) + 2);
    const BitMatrix& basis = split.c0.standard_basis();
    for (std::size_t i = 0; i < basis.rows(); ++i)
        rows.append_row(prefixed(false, false, basis.row(i)));
    rows.append_row(prefixed(true, true, split.rep_c2));
    rows.append_row(prefixed(true, false, split.rep_c1));
    return LinearCode(rows);
}

} // namespace sdc
