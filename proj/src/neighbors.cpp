#include "sdc/neighbors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sdc/equivalence.hpp"
#include "sdc/gf2.hpp"

namespace sdc {

std::string NeighborDescriptor::to_line() const {
    std::ostringstream os;
    os << parent << ":";
    for (std::size_t i = 0; i < support.size(); ++i) os << (i ? "," : "") << support[i];
    return os.str();
}

NeighborDescriptor NeighborDescriptor::from_line(std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
        throw CodeError(Errc::BadInput, "neighbor descriptor needs 'parent:supports'");
    NeighborDescriptor d;
    d.parent = std::string(line.substr(0, colon));
    std::string rest(line.substr(colon + 1));
    for (char& ch : rest)
        if (ch == ',') ch = ' ';
    std::istringstream is(rest);
    int v;
    while (is >> v) d.support.push_back(v);
    if (!is.eof()) throw CodeError(Errc::BadInput, "bad support list: " + rest);
    return d;
}

LinearCode neighbor(const LinearCode& c, const BitVector& x) {
    if (static_cast<int>(x.size()) != c.n())
        throw CodeError(Errc::DimensionMismatch, "x length differs from code length");
    if (!c.is_self_dual()) throw CodeError(Errc::NotSelfDual, "neighbor requires a self-dual code");
    if (x.weight() % 2 != 0)
        throw CodeError(Errc::OddWeight, "neighbor vector must have even weight");
    if (c.contains(x))
        throw CodeError(Errc::NotANeighbor, "x lies in the code (the neighbor would be c)");
    auto [rows, outside] = orthogonal_split(c, x);
    rows.append_row(x);
    return LinearCode(rows);
}

std::pair<LinearCode, LinearCode> doubly_even_neighbors(const LinearCode& c) {
    if (c.n() % 8 != 0)
        throw CodeError(Errc::PreconditionFailed,
                        "doubly even neighbors need length divisible by 8");
    const ShadowReport sh = shadow(c); // rejects non-singly-even input
    const LinearCode c0 = doubly_even_subcode(c);
    BitMatrix rows1 = c0.standard_basis(), rows2 = c0.standard_basis();
    rows1.append_row(sh.rep_c1);
    rows2.append_row(sh.rep_c3);
    return {LinearCode(rows1), LinearCode(rows2)};
}

std::optional<Weight10Elimination> weight10_neighbor_vector(const LinearCode& c) {
    if (!c.is_self_dual())
        throw CodeError(Errc::NotSelfDual, "weight-10 elimination requires a self-dual code");
    const std::vector<BitVector> words = codewords_of_weight(c, 10);
    if (words.empty())
        throw CodeError(Errc::NotApplicable, "code has no weight-10 codewords");
    BitMatrix m(0, c.n());
    for (const auto& wv : words) m.append_row(wv);
    auto sol = solve(m, BitVector::ones(m.rows()));
    if (!sol) return std::nullopt;

    // Move the particular solution into the even-weight subspace if possible.
    BitVector x = sol->particular;
    std::size_t odd_kernel = 0;
    BitVector odd_vec;
    for (std::size_t i = 0; i < sol->kernel.rows(); ++i)
        if (sol->kernel.row(i).weight() % 2 != 0) {
            if (odd_kernel == 0) odd_vec = sol->kernel.row(i);
            ++odd_kernel;
        }
    if (x.weight() % 2 != 0) {
        if (odd_kernel == 0) return std::nullopt; // no even-weight solution at all
        x ^= odd_vec;
    }

    // Even-weight solution set = x + (ker M n even); unique modulo the code
    // exactly when that intersection is the code itself.
    const std::size_t kernel_dim = sol->kernel.rows();
    const std::size_t even_kernel_dim = kernel_dim - (odd_kernel ? 1 : 0);
    Weight10Elimination out{
        c.reduce(x),
        even_kernel_dim == static_cast<std::size_t>(c.k()),
        c, // placeholder, replaced below
        c,
        c,
    };
    auto [rows, outside] = orthogonal_split(c, out.x);
    out.c0 = LinearCode(rows);
    BitMatrix rows1 = rows, rows2 = rows;
    rows1.append_row(out.x);
    rows2.append_row(out.x ^ outside);
    out.d1 = LinearCode(rows1);
    out.d2 = LinearCode(rows2);
    return out;
}

std::vector<NeighborRecord> enumerate_neighbors(const LinearCode& c,
                                                const NeighborSearchOptions& opts) {
    if (!c.is_self_dual())
        throw CodeError(Errc::NotSelfDual, "neighbor enumeration requires a self-dual code");
    const int n = c.n();
    std::vector<NeighborRecord> out;
    std::set<std::string> seen_codes;
    std::set<std::string> seen_fingerprints;
    auto admit = [&](const BitVector& x) {
        if (x.weight() % 2 != 0 || x.is_zero() || c.contains(x)) return;
        LinearCode nb = neighbor(c, x);
        if (opts.min_d > 0 && nb.min_weight() < opts.min_d) return;
        if (!seen_codes.insert(nb.basis_bytes()).second) return;
        if (opts.fingerprint_dedup && !seen_fingerprints.insert(fingerprint(nb).bytes()).second)
            return;
        out.push_back(NeighborRecord{x, std::move(nb)});
    };

    switch (opts.mode) {
    case NeighborMode::Targeted: {
        for (const auto& support : opts.supports) {
            BitVector x = BitVector::from_support(n, support);
            // Targeted replay is strict: errors surface instead of skipping.
            if (x.weight() % 2 != 0)
                throw CodeError(Errc::OddWeight, "targeted support has odd weight");
            LinearCode nb = neighbor(c, x);
            if (opts.min_d > 0 && nb.min_weight() < opts.min_d) continue;
            if (!seen_codes.insert(nb.basis_bytes()).second) continue;
            if (opts.fingerprint_dedup &&
                !seen_fingerprints.insert(fingerprint(nb).bytes()).second)
                continue;
            out.push_back(NeighborRecord{x, std::move(nb)});
        }
        break;
    }
    case NeighborMode::Bounded: {
        // Walk even-weight x of weight <= w_max in increasing weight, then
        // lexicographic-combination order; one representative per coset of c
        // (first visit has minimal weight, so it is a coset leader).
        std::set<std::string> seen_cosets;
        uint64_t tried = 0;
        const int wmax = std::min(opts.w_max, n);
        bool done = false;
        std::vector<int> idx;
        for (int w = 2; w <= wmax && !done; w += 2) {
            idx.assign(w, 0);
            for (int i = 0; i < w; ++i) idx[i] = i;
            while (!done) {
                BitVector x(n);
                for (int i : idx) x.set(i);
                if (opts.budget && ++tried > opts.budget) {
                    done = true;
                    break;
                }
                if (seen_cosets.insert(c.reduce(x).to_hex()).second) admit(x);
                // next w-combination of {0..n-1}
                int pos = w - 1;
                while (pos >= 0 && idx[pos] == n - w + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int i = pos + 1; i < w; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        break;
    }
    case NeighborMode::Random: {
        if (opts.budget == 0)
            throw CodeError(Errc::BadInput, "random neighbor mode needs a budget");
        std::mt19937_64 rng(opts.seed);
        for (uint64_t t = 0; t < opts.budget; ++t) {
            BitVector x(n);
            for (int i = 0; i < n; ++i)
                if (rng() & 1) x.set(i);
            if (x.weight() % 2 != 0) x.flip(static_cast<std::size_t>(rng() % n));
            admit(x);
        }
        break;
    }
    }
    return out;
}

} // namespace sdc
