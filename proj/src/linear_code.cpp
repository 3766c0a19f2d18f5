#include "sdc/linear_code.hpp"

#include <mutex>

#include "sdc/kernels.hpp"

namespace sdc {

// Defined in min_weight.cpp.
int detail_min_weight(const LinearCode& c);

struct LinearCode::Cache {
    std::mutex mu;
    std::optional<bool> self_orthogonal;
    std::optional<int> min_weight;
    std::optional<WeightDistribution> distribution;
};

LinearCode::LinearCode(const BitMatrix& generator)
    : n_(static_cast<int>(generator.cols())),
      k_(static_cast<int>(generator.rows())),
      gen_(generator),
      cache_(std::make_shared<Cache>()) {
    if (k_ == 0 || n_ == 0) throw CodeError(Errc::BadInput, "empty generator");
    RrefResult rr = rref(gen_);
    if (rr.rank != k_)
        throw CodeError(Errc::BadInput, "generator rows are linearly dependent");
    std::vector<BitVector> rows(rr.reduced.row_list().begin(),
                                rr.reduced.row_list().begin() + k_);
    std_ = BitMatrix(std::move(rows));
    pivots_ = std::move(rr.pivot_cols);
}

LinearCode LinearCode::from_rows(const BitMatrix& rows) {
    RrefResult rr = rref(rows);
    if (rr.rank == 0) throw CodeError(Errc::BadInput, "rows span only the zero code");
    std::vector<BitVector> basis(rr.reduced.row_list().begin(),
                                 rr.reduced.row_list().begin() + rr.rank);
    return LinearCode(BitMatrix(std::move(basis)));
}

bool LinearCode::contains(const BitVector& v) const { return reduce(v).is_zero(); }

BitVector LinearCode::reduce(const BitVector& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw CodeError(Errc::DimensionMismatch, "vector length != code length");
    BitVector r = v;
    for (int i = 0; i < k_; ++i)
        if (r.get(pivots_[i] - 1)) r ^= std_.row(i);
    return r;
}

std::string LinearCode::basis_bytes() const {
    std::string s;
    s.reserve(8 + k_ * ((n_ + 7) / 8));
    auto put32 = [&s](uint32_t x) {
        for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
    };
    put32(static_cast<uint32_t>(n_));
    put32(static_cast<uint32_t>(k_));
    for (int i = 0; i < k_; ++i) {
        const auto& w = std_.row(i).words();
        for (int byte = 0; byte < (n_ + 7) / 8; ++byte)
            s.push_back(static_cast<char>((w[byte / 8] >> (8 * (byte % 8))) & 0xff));
    }
    return s;
}

bool LinearCode::is_self_orthogonal() const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        if (cache_->self_orthogonal) return *cache_->self_orthogonal;
    }
    bool ok = true;
    for (int i = 0; i < k_ && ok; ++i)
        for (int j = i; j < k_; ++j)
            if (std_.row(i).dot(std_.row(j))) {
                ok = false;
                break;
            }
    std::lock_guard<std::mutex> lk(cache_->mu);
    cache_->self_orthogonal = ok;
    return ok;
}

bool LinearCode::is_self_dual() const { return n_ == 2 * k_ && is_self_orthogonal(); }

LinearCode LinearCode::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw CodeError(Errc::DimensionMismatch, "permutation length != code length");
    std::vector<bool> seen(n_, false);
    for (int p : perm) {
        if (p < 0 || p >= n_ || seen[p])
            throw CodeError(Errc::BadInput, "not a permutation");
        seen[p] = true;
    }
    BitMatrix g(k_, n_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < n_; ++j)
            if (gen_.get(i, j)) g.set(i, perm[j]);
    return LinearCode(g);
}

std::vector<uint64_t> LinearCode::packed_rows64() const {
    if (n_ > 64) throw CodeError(Errc::TooLarge, "code length exceeds 64");
    std::vector<uint64_t> rows(k_);
    for (int i = 0; i < k_; ++i) rows[i] = std_.row(i).words()[0];
    return rows;
}

std::vector<Word128> LinearCode::packed_rows128() const {
    if (n_ > 128) throw CodeError(Errc::TooLarge, "code length exceeds 128");
    std::vector<Word128> rows(k_);
    for (int i = 0; i < k_; ++i) {
        const auto& w = std_.row(i).words();
        rows[i].lo = w[0];
        rows[i].hi = w.size() > 1 ? w[1] : 0;
    }
    return rows;
}

int LinearCode::min_weight() const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        if (cache_->min_weight) return *cache_->min_weight;
    }
    int d = detail_min_weight(*this);
    std::lock_guard<std::mutex> lk(cache_->mu);
    cache_->min_weight = d;
    return d;
}

const WeightDistribution& LinearCode::weight_distribution(int budget_k) const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        if (cache_->distribution) return *cache_->distribution;
    }
    if (k_ > budget_k)
        throw CodeError(Errc::TooLarge, "weight distribution enumeration over budget");
    WeightDistribution wd(n_);
    WeightHist hist;
    if (n_ <= 64) {
        hist = subset_weight_hist64(packed_rows64(), 0, 0);
    } else {
        hist = subset_weight_hist128(packed_rows128(), Word128{}, 0);
    }
    for (int w = 0; w <= n_; ++w) wd.a[w] = hist[w];
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (!cache_->distribution) cache_->distribution = std::move(wd);
    return *cache_->distribution;
}

} // namespace sdc
