#include "sdc/equivalence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <map>
#include <random>
#include <utility>

namespace sdc {

namespace {

constexpr uint64_t kPairCap = 4'000'000;

void push_u32(std::string& s, uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void push_u64(std::string& s, uint64_t v) {
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

// Supports packed into two machine words (codes here have n <= 128).
std::array<uint64_t, 2> pack2(const BitVector& v) {
    std::array<uint64_t, 2> w{0, 0};
    if (v.word_count() > 0) w[0] = v.word(0);
    if (v.word_count() > 1) w[1] = v.word(1);
    return w;
}

int inter_size(const std::array<uint64_t, 2>& a, const std::array<uint64_t, 2>& b) {
    return std::popcount(a[0] & b[0]) + std::popcount(a[1] & b[1]);
}

} // namespace

std::string Fingerprint::bytes() const {
    std::string s;
    push_u32(s, static_cast<uint32_t>(n));
    push_u32(s, static_cast<uint32_t>(k));
    push_u32(s, static_cast<uint32_t>(d));
    push_u64(s, a_d);
    push_u64(s, a_d2);
    push_u32(s, static_cast<uint32_t>(incidence.size()));
    for (uint32_t v : incidence) push_u32(s, v);
    s.push_back(sampled ? '\1' : '\0');
    if (!sampled) {
        push_u32(s, static_cast<uint32_t>(intersections.size()));
        for (uint32_t v : intersections) push_u32(s, v);
    }
    return s;
}

bool Fingerprint::operator==(const Fingerprint& o) const { return bytes() == o.bytes(); }
bool Fingerprint::operator<(const Fingerprint& o) const { return bytes() < o.bytes(); }

Fingerprint fingerprint(const LinearCode& c) {
    Fingerprint fp;
    fp.n = c.n();
    fp.k = c.k();
    fp.d = c.min_weight();
    std::vector<BitVector> words = codewords_of_weight(c, fp.d);
    fp.a_d = words.size();
    fp.a_d2 = codewords_of_weight(c, fp.d + 2).size();

    std::vector<uint32_t> inc(static_cast<std::size_t>(fp.n), 0);
    for (const BitVector& w : words)
        for (std::size_t wi = 0; wi < w.word_count(); ++wi)
            for (uint64_t x = w.word(wi); x; x &= x - 1)
                ++inc[64 * wi + static_cast<std::size_t>(std::countr_zero(x))];
    std::sort(inc.begin(), inc.end());
    fp.incidence = std::move(inc);

    std::vector<std::array<uint64_t, 2>> packed;
    packed.reserve(words.size());
    for (const BitVector& w : words) packed.push_back(pack2(w));

    fp.intersections.assign(static_cast<std::size_t>(fp.n) + 1, 0);
    const uint64_t m = packed.size();
    const uint64_t pairs = m < 2 ? 0 : m * (m - 1) / 2;
    if (pairs <= kPairCap) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                ++fp.intersections[static_cast<std::size_t>(inter_size(packed[i], packed[j]))];
    } else {
        // Seeded sample: reproducible, but only the pair count (not the
        // histogram) is permutation invariant, so bytes() drops it.
        fp.sampled = true;
        std::mt19937_64 rng(0x5dc0de00c0deULL);
        std::uniform_int_distribution<uint64_t> pick(0, m - 1);
        for (uint64_t t = 0; t < kPairCap; ++t) {
            uint64_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            ++fp.intersections[static_cast<std::size_t>(inter_size(packed[i], packed[j]))];
        }
    }
    return fp;
}

namespace {

// Canonical labeling of the coordinates-vs-words incidence graph.
//
// Vertices: n coordinates (one initial cell) and the codewords of a
// weight window starting at {d} and growing until the words span the code
// (cells by weight).  Individualization-refinement with an invariant trace:
// refinement events record only cell positions, counts, and sizes, so the
// trace is identical for relabeled inputs.  The canonical form is the
// reduced basis of the permuted code at the (trace, bytes)-minimal leaf.
class CanonSearch {
public:
    explicit CanonSearch(const LinearCode& c) : code_(c), n_(c.n()) {
        collect_words();
        const int N = n_ + m_;
        lab_.resize(N);
        pos_.resize(N);
        ptn_.assign(N, 1);
        cstart_.resize(N);
        cell_mark_.assign(N, 0);
        cnt_.assign(N, 0);
        for (int i = 0; i < n_; ++i) lab_[i] = i;
        ptn_[n_ - 1] = 0;
        for (int i = 0; i < n_; ++i) cstart_[i] = 0;
        int at = n_;
        std::vector<int> initial{0};
        for (std::size_t g = 0; g < group_sizes_.size(); ++g) {
            initial.push_back(at);
            for (int j = 0; j < group_sizes_[g]; ++j) {
                lab_[at + j] = n_ + (at - n_) + j;
                cstart_[at + j] = at;
            }
            at += group_sizes_[g];
            ptn_[at - 1] = 0;
        }
        for (int i = 0; i < N; ++i) pos_[lab_[i]] = i;
        refine(initial);
        dfs();
    }

    CanonicalForm result() { return CanonicalForm{std::move(best_bytes_)}; }

private:
    void collect_words() {
        const int d = code_.min_weight();
        bool even_code = true;
        const BitMatrix& basis = code_.standard_basis();
        for (std::size_t i = 0; i < basis.rows(); ++i)
            if (basis.row(i).weight() % 2 != 0) even_code = false;
        const int step = even_code ? 2 : 1;

        std::vector<BitVector> indep;
        std::vector<int> lead(static_cast<std::size_t>(n_), -1);
        auto try_insert = [&](BitVector v) {
            for (;;) {
                int l = -1;
                for (std::size_t wi = 0; wi < v.word_count() && l < 0; ++wi)
                    if (v.word(wi)) l = static_cast<int>(64 * wi) + std::countr_zero(v.word(wi));
                if (l < 0) return false;
                if (lead[static_cast<std::size_t>(l)] < 0) {
                    lead[static_cast<std::size_t>(l)] = static_cast<int>(indep.size());
                    indep.push_back(std::move(v));
                    return true;
                }
                v ^= indep[static_cast<std::size_t>(lead[static_cast<std::size_t>(l)])];
            }
        };

        int rank = 0;
        for (int w = d; w <= n_ && rank < code_.k(); w += step) {
            std::vector<BitVector> ws = codewords_of_weight(code_, w);
            if (ws.empty()) continue;
            for (const BitVector& v : ws)
                if (try_insert(v)) ++rank;
            group_sizes_.push_back(static_cast<int>(ws.size()));
            for (const BitVector& v : ws) wsupp_.push_back(pack2(v));
        }
        if (rank < code_.k())
            throw CodeError(Errc::BadInput, "weight window failed to span the code");
        m_ = static_cast<int>(wsupp_.size());
        coord_words_.assign(static_cast<std::size_t>(n_), {});
        for (int w = 0; w < m_; ++w)
            for (int half = 0; half < 2; ++half)
                for (uint64_t x = wsupp_[static_cast<std::size_t>(w)][static_cast<std::size_t>(half)]; x; x &= x - 1)
                    coord_words_[static_cast<std::size_t>(64 * half + std::countr_zero(x))].push_back(w);
    }

    int cell_end(int s) const {
        int e = s;
        while (ptn_[static_cast<std::size_t>(e)] == 1) ++e;
        return e + 1;
    }

    void refine(std::vector<int> queue) {
        std::vector<int>& cnt = cnt_;
        std::vector<int> touched, affected;
        std::vector<std::pair<int, int>> tmp; // (count, vertex)
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int s = queue[qi];
            const int e = cell_end(s);
            touched.clear();
            if (lab_[static_cast<std::size_t>(s)] < n_) {
                for (int i = s; i < e; ++i)
                    for (int w : coord_words_[static_cast<std::size_t>(lab_[static_cast<std::size_t>(i)])]) {
                        const int v = n_ + w;
                        if (cnt[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
                    }
            } else {
                for (int i = s; i < e; ++i) {
                    const auto& sup = wsupp_[static_cast<std::size_t>(lab_[static_cast<std::size_t>(i)] - n_)];
                    for (int half = 0; half < 2; ++half)
                        for (uint64_t x = sup[static_cast<std::size_t>(half)]; x; x &= x - 1) {
                            const int v = 64 * half + std::countr_zero(x);
                            if (cnt[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
                        }
                }
            }
            affected.clear();
            for (int v : touched) {
                const int cs = cstart_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)])];
                if (!cell_mark_[static_cast<std::size_t>(cs)]) {
                    cell_mark_[static_cast<std::size_t>(cs)] = 1;
                    affected.push_back(cs);
                }
            }
            std::sort(affected.begin(), affected.end());
            for (int cs : affected) {
                cell_mark_[static_cast<std::size_t>(cs)] = 0;
                const int ce = cell_end(cs);
                if (ce - cs == 1) continue;
                tmp.clear();
                bool uniform = true;
                for (int i = cs; i < ce; ++i) {
                    const int v = lab_[static_cast<std::size_t>(i)];
                    tmp.emplace_back(cnt[static_cast<std::size_t>(v)], v);
                    if (tmp.back().first != tmp.front().first) uniform = false;
                }
                if (uniform) continue;
                std::stable_sort(tmp.begin(), tmp.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                int ngroups = 0;
                for (std::size_t i = 0; i < tmp.size();) {
                    std::size_t j = i;
                    while (j < tmp.size() && tmp[j].first == tmp[i].first) ++j;
                    ++ngroups;
                    i = j;
                }
                trace_.push_back(static_cast<uint32_t>(s));
                trace_.push_back(static_cast<uint32_t>(cs));
                trace_.push_back(static_cast<uint32_t>(ngroups));
                int gstart = cs;
                int big_start = -1, big_size = -1;
                std::vector<std::pair<int, int>> groups; // (start, size)
                for (std::size_t i = 0; i < tmp.size();) {
                    std::size_t j = i;
                    while (j < tmp.size() && tmp[j].first == tmp[i].first) ++j;
                    const int gsz = static_cast<int>(j - i);
                    trace_.push_back(static_cast<uint32_t>(tmp[i].first));
                    trace_.push_back(static_cast<uint32_t>(gsz));
                    for (int t = 0; t < gsz; ++t) {
                        const int v = tmp[i + static_cast<std::size_t>(t)].second;
                        lab_[static_cast<std::size_t>(gstart + t)] = v;
                        pos_[static_cast<std::size_t>(v)] = gstart + t;
                        cstart_[static_cast<std::size_t>(gstart + t)] = gstart;
                        ptn_[static_cast<std::size_t>(gstart + t)] = 1;
                    }
                    ptn_[static_cast<std::size_t>(gstart + gsz - 1)] = 0;
                    groups.emplace_back(gstart, gsz);
                    if (gsz > big_size) {
                        big_size = gsz;
                        big_start = gstart;
                    }
                    gstart += gsz;
                    i = j;
                }
                for (const auto& [gs, gz] : groups)
                    if (gs != big_start) queue.push_back(gs);
            }
            for (int v : touched) cnt[static_cast<std::size_t>(v)] = 0;
        }
    }

    // -1: strictly better than the stored best (which is discarded),
    //  0: consistent so far, 1: worse (prune).
    int prune_check() {
        if (!have_best_) return 0;
        const std::size_t L = trace_.size(), B = best_trace_.size();
        const std::size_t M = std::min(L, B);
        for (std::size_t i = 0; i < M; ++i) {
            if (trace_[i] != best_trace_[i]) {
                if (trace_[i] < best_trace_[i]) {
                    have_best_ = false;
                    return -1;
                }
                return 1;
            }
        }
        return L > B ? 1 : 0;
    }

    void leaf() {
        std::vector<int> perm(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) perm[static_cast<std::size_t>(lab_[static_cast<std::size_t>(i)])] = i;
        std::string bytes = code_.permuted(perm).basis_bytes();
        if (!have_best_) {
            have_best_ = true;
            best_trace_ = trace_;
            best_bytes_ = std::move(bytes);
            best_perm_ = std::move(perm);
            return;
        }
        if (trace_ == best_trace_ && bytes == best_bytes_) {
            // Two labelings with the same canonical image differ by an
            // automorphism; collect it for orbit pruning.
            if (autos_.size() < kMaxAutos) {
                std::vector<int> inv(static_cast<std::size_t>(n_));
                for (int i = 0; i < n_; ++i) inv[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(i)])] = i;
                std::vector<int> g(static_cast<std::size_t>(n_));
                bool identity = true;
                for (int i = 0; i < n_; ++i) {
                    g[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                    if (g[static_cast<std::size_t>(i)] != i) identity = false;
                }
                if (!identity) autos_.push_back(std::move(g));
            }
            return;
        }
        const bool shorter = trace_.size() < best_trace_.size();
        if (shorter || (trace_ == best_trace_ && bytes < best_bytes_)) {
            best_trace_ = trace_;
            best_bytes_ = std::move(bytes);
            best_perm_ = std::move(perm);
        }
    }

    // True when an already-explored sibling lies in v's orbit under the
    // discovered automorphisms that fix every individualized vertex so far.
    bool orbit_redundant(int v, const std::vector<int>& explored) {
        if (autos_.empty() || explored.empty()) return false;
        std::vector<int> uf(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) uf[static_cast<std::size_t>(i)] = i;
        auto find = [&](int a) {
            while (uf[static_cast<std::size_t>(a)] != a) {
                uf[static_cast<std::size_t>(a)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(a)])];
                a = uf[static_cast<std::size_t>(a)];
            }
            return a;
        };
        for (const std::vector<int>& g : autos_) {
            bool fixes_path = true;
            for (int p : path_)
                if (g[static_cast<std::size_t>(p)] != p) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            for (int i = 0; i < n_; ++i) {
                const int a = find(i), b = find(g[static_cast<std::size_t>(i)]);
                if (a != b) uf[static_cast<std::size_t>(a)] = b;
            }
        }
        const int rv = find(v);
        for (int u : explored)
            if (find(u) == rv) return true;
        return false;
    }

    void dfs() {
        int ts = -1, tsz = INT_MAX;
        for (int i = 0; i < n_;) {
            const int e = cell_end(i);
            if (e - i > 1 && e - i < tsz) {
                tsz = e - i;
                ts = i;
            }
            i = e;
        }
        if (ts < 0) {
            leaf();
            return;
        }
        const std::vector<int> members(lab_.begin() + ts, lab_.begin() + ts + tsz);
        std::vector<int> explored;
        for (int v : members) {
            if (orbit_redundant(v, explored)) continue;
            explored.push_back(v);
            const std::vector<int> save_lab = lab_, save_pos = pos_, save_ptn = ptn_,
                                   save_cstart = cstart_;
            const std::size_t tlen = trace_.size();
            const int p = pos_[static_cast<std::size_t>(v)];
            std::swap(lab_[static_cast<std::size_t>(ts)], lab_[static_cast<std::size_t>(p)]);
            pos_[static_cast<std::size_t>(lab_[static_cast<std::size_t>(p)])] = p;
            pos_[static_cast<std::size_t>(v)] = ts;
            ptn_[static_cast<std::size_t>(ts)] = 0;
            cstart_[static_cast<std::size_t>(ts)] = ts;
            for (int i = ts + 1; i < ts + tsz; ++i) cstart_[static_cast<std::size_t>(i)] = ts + 1;
            trace_.push_back(0xFFFFFFFFu);
            trace_.push_back(static_cast<uint32_t>(ts));
            path_.push_back(v);
            refine({ts, ts + 1});
            if (prune_check() <= 0) dfs();
            path_.pop_back();
            lab_ = save_lab;
            pos_ = save_pos;
            ptn_ = save_ptn;
            cstart_ = save_cstart;
            trace_.resize(tlen);
        }
    }

    const LinearCode& code_;
    int n_;
    int m_ = 0;
    std::vector<std::array<uint64_t, 2>> wsupp_;
    std::vector<std::vector<int>> coord_words_;
    std::vector<int> group_sizes_;

    std::vector<int> lab_, pos_, ptn_, cstart_;
    std::vector<char> cell_mark_;
    std::vector<int> cnt_;
    std::vector<uint32_t> trace_;

    static constexpr std::size_t kMaxAutos = 256;

    bool have_best_ = false;
    std::vector<uint32_t> best_trace_;
    std::string best_bytes_;
    std::vector<int> best_perm_;
    std::vector<std::vector<int>> autos_;
    std::vector<int> path_;
};

} // namespace

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char ch : bytes) {
        out.push_back(digits[ch >> 4]);
        out.push_back(digits[ch & 0xf]);
    }
    return out;
}

CanonicalForm canonical_form(const LinearCode& c) {
    if (c.n() > 128)
        throw CodeError(Errc::TooLarge, "canonical form supports n <= 128");
    return CanonSearch(c).result();
}

bool are_equivalent(const LinearCode& c1, const LinearCode& c2) {
    if (c1.n() != c2.n() || c1.k() != c2.k()) return false;
    if (fingerprint(c1).bytes() != fingerprint(c2).bytes()) return false;
    return canonical_form(c1) == canonical_form(c2);
}

std::vector<std::vector<int>> partition_classes(const std::vector<LinearCode>& codes) {
    std::map<std::string, std::vector<int>> by_fp;
    for (std::size_t i = 0; i < codes.size(); ++i)
        by_fp[fingerprint(codes[i]).bytes()].push_back(static_cast<int>(i));
    std::map<std::string, std::vector<int>> by_canon;
    for (const auto& [fp, idxs] : by_fp)
        for (int i : idxs) by_canon[canonical_form(codes[static_cast<std::size_t>(i)]).bytes].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(by_canon.size());
    for (auto& [key, members] : by_canon) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

} // namespace sdc
