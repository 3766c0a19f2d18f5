#include "sdc/gf2.hpp"

namespace sdc {

RrefResult rref(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_list();
    const std::size_t nr = rows.size(), nc = m.cols();
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t p = r;
        while (p < nr && !rows[p].get(col)) ++p;
        if (p == nr) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        pivots.push_back(static_cast<int>(col) + 1);
        ++r;
    }
    RrefResult res;
    res.rank = static_cast<int>(r);
    res.pivot_cols = std::move(pivots);
    res.reduced = BitMatrix(std::move(rows));
    return res;
}

int rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix nullspace(const BitMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (int p : rr.pivot_cols) is_pivot[p - 1] = true;
    BitMatrix basis(0, nc);
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(nc);
        v.set(f);
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            if (rr.reduced.get(i, f)) v.set(rr.pivot_cols[i] - 1);
        basis.append_row(v);
    }
    return basis;
}

std::optional<Gf2Solution> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows())
        throw CodeError(Errc::DimensionMismatch, "solve: rhs length != row count");
    const std::size_t nr = m.rows(), nc = m.cols();
    // Eliminate on the augmented system, tracking the rhs bit per row.
    std::vector<BitVector> rows = m.row_list();
    std::vector<bool> rhs(nr);
    for (std::size_t i = 0; i < nr; ++i) rhs[i] = b.get(i);
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t p = r;
        while (p < nr && !rows[p].get(col)) ++p;
        if (p == nr) continue;
        std::swap(rows[r], rows[p]);
        std::swap(rhs[r], rhs[p]);
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && rows[i].get(col)) {
                rows[i] ^= rows[r];
                rhs[i] = rhs[i] != rhs[r];
            }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (rhs[i]) return std::nullopt;
    Gf2Solution sol;
    sol.particular = BitVector(nc);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (rhs[i]) sol.particular.set(pivots[i]);
    sol.kernel = nullspace(m);
    return sol;
}

} // namespace sdc
