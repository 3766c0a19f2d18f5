#include "sdc/circulant.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sdc/equivalence.hpp"

namespace sdc {

namespace {

uint32_t order_mask(int n) { return n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1; }

// Cyclic shift adding s to every coordinate: bit p -> bit (p + s) mod n.
uint32_t rot_left(uint32_t bits, int s, int n) {
    s %= n;
    if (s == 0) return bits;
    return ((bits << s) | (bits >> (n - s))) & order_mask(n);
}

// bit q -> r[(n - q) mod n]; circulant(reflect(r)) is the transpose.
uint32_t reflect_bits(uint32_t bits, int n) {
    uint32_t out = bits & 1u;
    for (int p = 1; p < n; ++p)
        if ((bits >> p) & 1u) out |= uint32_t{1} << (n - p);
    return out;
}

uint32_t autocorr_sig(uint32_t bits, int n) {
    uint32_t sig = 0;
    for (int s = 0; s < n; ++s) {
        uint32_t shifted = rot_left(bits, n - s, n); // coordinate j = r[(j+s) mod n]
        if (std::popcount(bits & shifted) & 1) sig |= uint32_t{1} << s;
    }
    return sig;
}

} // namespace

CirculantRow::CirculantRow(int n, uint32_t b) : order(n), bits(b) {
    if (n < 1 || n > 32) throw CodeError(Errc::BadInput, "circulant order must be in 1..32");
    if (n < 32 && (b >> n) != 0)
        throw CodeError(Errc::BadInput, "circulant row has bits beyond its order");
}

CirculantRow CirculantRow::from_string(std::string_view s) {
    std::string t;
    for (char ch : s) {
        if (ch == '(' || ch == ')' || ch == ' ' || ch == ',') continue;
        t.push_back(ch);
    }
    if (t.empty() || t.size() > 32)
        throw CodeError(Errc::BadInput, "circulant row string must have 1..32 binary digits");
    uint32_t b = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '1')
            b |= uint32_t{1} << i;
        else if (t[i] != '0')
            throw CodeError(Errc::BadInput, "circulant row string must be binary");
    }
    return CirculantRow(static_cast<int>(t.size()), b);
}

int CirculantRow::weight() const { return std::popcount(bits); }

std::string CirculantRow::to_string() const {
    std::string s(order, '0');
    for (int i = 0; i < order; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool CirculantRow::operator<(const CirculantRow& o) const {
    if (order != o.order) return order < o.order;
    uint32_t diff = bits ^ o.bits;
    if (diff == 0) return false;
    // First differing coordinate decides; the row with 0 there is smaller.
    return (bits >> std::countr_zero(diff) & 1u) == 0;
}

BitMatrix circulant(const CirculantRow& r) {
    const int n = r.order;
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        uint32_t row = rot_left(r.bits, i, n);
        for (int j = 0; j < n; ++j)
            if ((row >> j) & 1u) m.set(i, j);
    }
    return m;
}

BitVector autocorrelation(const CirculantRow& r) {
    uint32_t sig = autocorr_sig(r.bits, r.order);
    BitVector v(r.order);
    for (int s = 0; s < r.order; ++s)
        if ((sig >> s) & 1u) v.set(s);
    return v;
}

bool is_self_dual_pair(const CirculantRow& ra, const CirculantRow& rb) {
    if (ra.order != rb.order)
        throw CodeError(Errc::DimensionMismatch, "circulant rows have different orders");
    return (autocorr_sig(ra.bits, ra.order) ^ autocorr_sig(rb.bits, rb.order)) == 1u;
}

LinearCode four_circulant_code(const CirculantRow& ra, const CirculantRow& rb,
                               bool require_self_dual) {
    if (ra.order != rb.order)
        throw CodeError(Errc::DimensionMismatch, "circulant rows have different orders");
    if (require_self_dual && !is_self_dual_pair(ra, rb))
        throw CodeError(Errc::NotSelfDual, "AA^T + BB^T != I for this pair");
    const int n = ra.order;
    BitMatrix g(2 * n, 4 * n);
    for (int i = 0; i < n; ++i) {
        g.set(i, i);
        g.set(n + i, n + i);
        const uint32_t arow = rot_left(ra.bits, i, n);
        const uint32_t brow = rot_left(rb.bits, i, n);
        const uint32_t btrow = rot_left(reflect_bits(rb.bits, n), i, n);
        const uint32_t atrow = rot_left(reflect_bits(ra.bits, n), i, n);
        for (int j = 0; j < n; ++j) {
            if ((arow >> j) & 1u) g.set(i, 2 * n + j);
            if ((brow >> j) & 1u) g.set(i, 3 * n + j);
            if ((btrow >> j) & 1u) g.set(n + i, 2 * n + j);
            if ((atrow >> j) & 1u) g.set(n + i, 3 * n + j);
        }
    }
    return LinearCode(g);
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

namespace {

struct PackedPair {
    // Two systematic generators of the same [4n, 2n] code: (I | M) and
    // (M^T | I).  The second is a codeword basis because M M^T = I, and its
    // information set is disjoint from the first one's.
    std::vector<uint64_t> g1, g2;
};

PackedPair pack_generators(uint32_t ra, uint32_t rb, int n) {
    PackedPair p;
    p.g1.resize(2 * n);
    p.g2.resize(2 * n);
    const uint32_t rra = reflect_bits(ra, n), rrb = reflect_bits(rb, n);
    for (int i = 0; i < n; ++i) {
        p.g1[i] = (uint64_t{1} << i) | (uint64_t{rot_left(ra, i, n)} << (2 * n)) |
                  (uint64_t{rot_left(rb, i, n)} << (3 * n));
        p.g1[n + i] = (uint64_t{1} << (n + i)) | (uint64_t{rot_left(rrb, i, n)} << (2 * n)) |
                      (uint64_t{rot_left(rra, i, n)} << (3 * n));
        p.g2[i] = uint64_t{rot_left(rra, i, n)} | (uint64_t{rot_left(rb, i, n)} << n) |
                  (uint64_t{1} << (2 * n + i));
        p.g2[n + i] = uint64_t{rot_left(rrb, i, n)} | (uint64_t{rot_left(ra, i, n)} << n) |
                      (uint64_t{1} << (3 * n + i));
    }
    return p;
}

// Exact minimum weight of the candidate, or -1 when it is certifiably
// outside every target.  Enumerates messages of weight <= depth over both
// systematic generators; any word missed by both has weight >= 2(depth+1).
int classify_candidate(const PackedPair& p, int depth, int bound, int dmin, int max_t, int cap) {
    int best = INT_MAX;
    auto visit = [&](uint64_t word) {
        int w = std::popcount(word);
        if (w < best) {
            best = w;
            if (best < dmin) return false; // below every target: reject early
        }
        return true;
    };
    if (!for_each_low_weight_combo(p.g1, depth, uint64_t{0}, visit)) return -1;
    if (!for_each_low_weight_combo(p.g2, depth, uint64_t{0}, visit)) return -1;
    if (best < bound) return best;
    // Nothing found below the enumeration bound: minimum weight >= bound.
    if (bound >= max_t + 1) return -1;
    return cap; // bound == cap == max_t: the Rains cap pins the value
}

// Coordinate-lexicographic order on rows of one order: the first differing
// coordinate decides and the row with 0 there is smaller.  Matches
// CirculantRow::operator< and therefore FourCirculantPair ordering.
bool row_lex_less(uint32_t a, uint32_t b) {
    if (a == b) return false;
    return ((a >> std::countr_zero(a ^ b)) & 1u) == 0;
}

uint64_t pack_pair(uint32_t ra, uint32_t rb) { return (uint64_t{ra} << 32) | rb; }

bool pair_lex_less(uint64_t a, uint64_t b) {
    const auto a1 = static_cast<uint32_t>(a >> 32), b1 = static_cast<uint32_t>(b >> 32);
    if (a1 != b1) return row_lex_less(a1, b1);
    return row_lex_less(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
}

// The four-circulant codes of (ra, rb), (rot ra, rb), (ra, rot rb), (rb, ra)
// and (reflect ra, reflect rb) are all equivalent: shifts permute the
// circulant columns, swapping the rows swaps the two right-hand column
// blocks, and reflecting both rows (which transposes both circulants) swaps
// the two identity blocks combined with a swap.  Orbits of the generated
// symmetry group (~4 * order^2 pairs at order 16) therefore collapse to one
// candidate each.  These transformations are also asserted to preserve
// equivalence by the test suite.
struct PairSymmetry {
    int order;
    std::vector<uint32_t> refl, mrot; // per row value: reflection, minimal rotation

    explicit PairSymmetry(int n) : order(n) {
        const uint64_t space = uint64_t{1} << n;
        refl.resize(space);
        mrot.resize(space);
        for (uint64_t v = 0; v < space; ++v) {
            const auto bits = static_cast<uint32_t>(v);
            refl[v] = reflect_bits(bits, n);
            uint32_t best = bits;
            for (int s = 1; s < n; ++s) {
                const uint32_t r = rot_left(bits, s, n);
                if (row_lex_less(r, best)) best = r;
            }
            mrot[v] = best;
        }
    }

    // Lexicographically first pair in the symmetry orbit of (ra, rb).  The
    // shifts act on the two rows independently, so the minimum over a swap /
    // reflection variant is just (min-rotation, min-rotation).
    uint64_t orbit_key(uint32_t ra, uint32_t rb) const {
        const uint32_t a = mrot[ra], b = mrot[rb];
        const uint32_t fa = mrot[refl[ra]], fb = mrot[refl[rb]];
        uint64_t best = pack_pair(a, b);
        for (uint64_t cand : {pack_pair(b, a), pack_pair(fa, fb), pack_pair(fb, fa)})
            if (pair_lex_less(cand, best)) best = cand;
        return best;
    }
};

struct StateData {
    std::set<uint64_t> done_lo; // block starts already completed
    std::vector<uint64_t> keys; // orbit keys already discovered
    uint64_t scanned = 0;
};

std::string state_header(int order, const std::vector<int>& targets) {
    std::ostringstream os;
    os << "# four-circulant search order=" << order << " d=";
    for (std::size_t i = 0; i < targets.size(); ++i)
        os << (i ? "," : "") << targets[i];
    return os.str();
}

uint32_t parse_row_bits(const std::string& s, int order) {
    CirculantRow r = CirculantRow::from_string(s);
    if (r.order != order) throw CodeError(Errc::BadInput, "state file row has wrong order");
    return r.bits;
}

StateData load_state(const std::string& path, const std::string& header) {
    StateData st;
    std::ifstream is(path);
    if (!is) return st;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!saw_header) {
                if (line != header)
                    throw CodeError(Errc::BadInput,
                                    "state file belongs to a different search: " + line);
                saw_header = true;
            }
            continue;
        }
        if (line.rfind("cand:", 0) == 0) {
            std::string body = line.substr(5);
            auto c1 = body.find(',');
            if (c1 == std::string::npos)
                throw CodeError(Errc::BadInput, "malformed state cand line: " + line);
            std::string sa = body.substr(0, c1), sb = body.substr(c1 + 1);
            const int order = static_cast<int>(sa.size());
            st.keys.push_back(pack_pair(parse_row_bits(sa, order), parse_row_bits(sb, order)));
        } else if (line.rfind("done:", 0) == 0) {
            std::string body = line.substr(5);
            auto dash = body.find('-');
            if (dash == std::string::npos)
                throw CodeError(Errc::BadInput, "malformed state done line: " + line);
            st.done_lo.insert(std::stoull(body.substr(0, dash)));
        } else if (line.rfind("count:", 0) == 0) {
            st.scanned += std::stoull(line.substr(6));
        } else {
            throw CodeError(Errc::BadInput, "unrecognised state line: " + line);
        }
    }
    return st;
}

} // namespace

SearchResult search_four_circulant(int order, std::vector<int> target_d,
                                   const SearchOptions& opts) {
    if (order < 1) throw CodeError(Errc::BadInput, "order must be >= 1");
    if (order > 16) throw CodeError(Errc::TooLarge, "search supported for order <= 16");
    if (target_d.empty()) throw CodeError(Errc::BadInput, "no target minimum weights");
    std::sort(target_d.begin(), target_d.end());
    target_d.erase(std::unique(target_d.begin(), target_d.end()), target_d.end());
    for (int d : target_d)
        if (d < 1) throw CodeError(Errc::BadInput, "target minimum weight must be >= 1");

    SearchResult res;
    res.order = order;
    res.target_d = target_d;
    for (int d : target_d) res.classes.emplace_back(d, std::vector<FourCirculantClass>{});

    const int cap = rains_bound(4 * order);
    std::vector<int> live; // reachable targets (self-dual codes respect the cap)
    for (int d : target_d)
        if (d <= cap) live.push_back(d);
    if (live.empty()) return res;
    const int dmin = live.front(), max_t = live.back();
    // Enumeration depth: all codewords of weight < bound are visited, with
    // bound = 2*(depth+1) from the two disjoint information sets.
    const int want = std::min(cap, max_t + 2);
    const int depth = (want + 1) / 2 - 1;
    const int bound = 2 * (depth + 1);

    // The published searches apply the threshold 13 to weight(ra) +
    // weight(rb); keep it verbatim whenever rows of the order can reach it,
    // and fall back to the necessary row-weight bound min(d) - 1 below that.
    const int min_wsum = 2 * order >= 13 ? 13 : std::max(1, dmin - 1);

    const int threads = opts.threads > 0 ? opts.threads : thread_count();
    const uint32_t mask = order_mask(order);
    const uint64_t space = uint64_t{1} << order;
    const PairSymmetry sym(order);

    // Bucket the normalised rb candidates by autocorrelation signature.  A
    // cyclic shift of rb gives an equivalent code, so rb is pinned to have
    // its last coordinate set; rb = 0 has no shiftable bit and is kept.
    std::unordered_map<uint32_t, std::vector<uint32_t>> buckets;
    for (uint64_t v = 0; v <= mask; ++v) {
        auto rb = static_cast<uint32_t>(v);
        if (rb != 0 && !((rb >> (order - 1)) & 1u)) continue;
        buckets[autocorr_sig(rb, order)].push_back(rb);
    }

    const std::string header = state_header(order, target_d);
    StateData st;
    if (!opts.state_file.empty()) st = load_state(opts.state_file, header);
    if (!opts.state_file.empty() && st.done_lo.empty() && st.keys.empty()) {
        std::ofstream os(opts.state_file, std::ios::trunc);
        os << header << "\n";
    }

    std::unordered_set<uint64_t> keyset(st.keys.begin(), st.keys.end());
    uint64_t scanned = st.scanned;

    const uint64_t block = 1024;
    for (uint64_t lo = 0; lo < space; lo += block) {
        const uint64_t hi = std::min(space, lo + block);
        if (st.done_lo.count(lo)) continue;
        std::vector<uint64_t> found;
        uint64_t blk_scanned = 0;
#pragma omp parallel num_threads(threads) reduction(+ : blk_scanned)
        {
            std::vector<uint64_t> local;
#pragma omp for schedule(dynamic, 16)
            for (int64_t rai = static_cast<int64_t>(lo); rai < static_cast<int64_t>(hi); ++rai) {
                const auto ra = static_cast<uint32_t>(rai);
                const int wa = std::popcount(ra);
                auto it = buckets.find(autocorr_sig(ra, order) ^ 1u);
                if (it == buckets.end()) continue;
                for (uint32_t rb : it->second) {
                    const int wsum = wa + std::popcount(rb);
                    if (wsum % 4 != 1 || wsum < min_wsum) continue;
                    ++blk_scanned;
                    local.push_back(sym.orbit_key(ra, rb));
                }
            }
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        std::vector<uint64_t> fresh;
        for (uint64_t key : found)
            if (keyset.insert(key).second) fresh.push_back(key);
        scanned += blk_scanned;
        if (!opts.state_file.empty()) {
            std::ofstream os(opts.state_file, std::ios::app);
            for (uint64_t key : fresh)
                os << "cand:"
                   << CirculantRow(order, static_cast<uint32_t>(key >> 32)).to_string() << ","
                   << CirculantRow(order, static_cast<uint32_t>(key)).to_string() << "\n";
            os << "count:" << blk_scanned << "\n";
            os << "done:" << lo << "-" << (hi - 1) << "\n";
        }
        if (opts.progress)
            std::fprintf(stderr, "search order=%d: rows %llu-%llu scanned=%llu orbits=%zu\n",
                         order, static_cast<unsigned long long>(lo),
                         static_cast<unsigned long long>(hi - 1),
                         static_cast<unsigned long long>(blk_scanned), keyset.size());
    }

    res.candidates_scanned = scanned;

    // Classify one representative per orbit: the orbit's transformations all
    // preserve the minimum weight and the equivalence class.
    std::vector<uint64_t> keys(keyset.begin(), keyset.end());
    std::sort(keys.begin(), keys.end(), pair_lex_less);
    std::vector<int> mvals(keys.size(), -1);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto ra = static_cast<uint32_t>(keys[i] >> 32);
        const auto rb = static_cast<uint32_t>(keys[i]);
        const PackedPair p = pack_generators(ra, rb, order);
        mvals[i] = classify_candidate(p, depth, bound, dmin, max_t, cap);
    }
    const std::set<int> live_set(live.begin(), live.end());
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (mvals[i] >= 0 && live_set.count(mvals[i])) ++res.survivors;

    // Partition the surviving orbit representatives into equivalence
    // classes, one target weight at a time.
    for (auto& [d, classes] : res.classes) {
        std::vector<LinearCode> codes;
        std::vector<std::vector<FourCirculantPair>> members;
        std::map<std::string, std::size_t> seen; // identical codes collapse
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (mvals[i] != d) continue;
            const CirculantRow ra(order, static_cast<uint32_t>(keys[i] >> 32));
            const CirculantRow rb(order, static_cast<uint32_t>(keys[i]));
            LinearCode code = four_circulant_code(ra, rb, true);
            auto [it, inserted] = seen.emplace(code.basis_bytes(), codes.size());
            if (inserted) {
                codes.push_back(std::move(code));
                members.emplace_back();
            }
            members[it->second].push_back(FourCirculantPair{ra, rb});
        }
        if (codes.empty()) continue;
        for (const auto& group : partition_classes(codes)) {
            FourCirculantClass cls{FourCirculantPair{}, {}, codes[group[0]]};
            for (int idx : group)
                cls.members.insert(cls.members.end(), members[idx].begin(), members[idx].end());
            std::sort(cls.members.begin(), cls.members.end());
            cls.rep = cls.members.front();
            // keep the code of the lexicographically first member as class code
            cls.code = four_circulant_code(cls.rep.ra, cls.rep.rb, true);
            classes.push_back(std::move(cls));
        }
        std::sort(classes.begin(), classes.end(),
                  [&](const FourCirculantClass& a, const FourCirculantClass& b) {
                      return a.rep < b.rep;
                  });
    }
    return res;
}

} // namespace sdc
