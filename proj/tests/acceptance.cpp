// Acceptance gate for the toolkit: reruns the headline computations and
// prints one PASS/FAIL line per criterion.  Exit status 0 iff all pass.
//
//   1. four-circulant table rebuilds with exact beta values
//   2. order-16 d=12 classification: 67 classes, matching beta multiset
//   3. order-16 d=10 classification: 224 classes
//   4. neighbor table rebuilds with exact (family, beta)
//   5. covering radius 12 certificates for all 22 shadow-minimum-12 parents
//   6. doubly even pool: exactly the four known equivalent pairs
//   7. two-coordinate extensions: seven [66,33,12] codes, exact classes
//   8. weight-10 elimination on every d=10 representative
//   9. independent oracle suites (fast)
//
// argv[1] (optional): path of the order-16 search checkpoint; reruns resume.

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sdc/circulant.hpp>
#include <sdc/covering.hpp>
#include <sdc/equivalence.hpp>
#include <sdc/extend.hpp>
#include <sdc/neighbors.hpp>
#include <sdc/tables.hpp>

#include "helpers.hpp"

using namespace sdc;

namespace {

using Clock = std::chrono::steady_clock;

// failure detail, or empty for pass
using Outcome = std::optional<std::string>;

struct Gate {
    int failures = 0;

    void run(int idx, double budget_s, const std::string& label, auto&& fn) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (!out && secs > budget_s)
            out = "over budget: " + std::to_string(secs) + "s > " +
                  std::to_string(budget_s) + "s";
        if (out) ++failures;
        std::printf("criterion %d: %s  [%.1fs]  %s%s\n", idx, out ? "FAIL" : "PASS", secs,
                    label.c_str(), out ? ("  (" + *out + ")").c_str() : "");
        std::fflush(stdout);
    }
};

std::string join_counts(const std::map<int, int>& m) {
    std::ostringstream os;
    for (auto [k, v] : m) os << k << "x" << v << " ";
    return os.str();
}

// Representatives of the two shadow halves without enumerating the shadow:
// any vector of C0-perp outside C, and its translate by a singly even
// codeword.  Weight residues mod 4 are constant on each half.
std::pair<BitVector, BitVector> shadow_half_reps(const LinearCode& c) {
    const LinearCode c0 = doubly_even_subcode(c);
    const BitMatrix perp = nullspace(c0.standard_basis());
    BitVector s;
    for (const BitVector& r : perp.row_list())
        if (!c.contains(r)) {
            s = r;
            break;
        }
    if (s.size() == 0) throw std::logic_error("C0-perp has no vector outside C");
    BitVector u;
    for (const BitVector& r : c.generator().row_list())
        if (r.weight() % 4 == 2) {
            u = r;
            break;
        }
    if (u.size() == 0) throw std::logic_error("no singly even generator row");
    return {s, s ^ u};
}

int beta_of(const LinearCode& c) {
    const auto w12 = codewords_of_weight(c, 12);
    return (static_cast<int>(w12.size()) - 1312) / 16;
}

} // namespace

int main(int argc, char** argv) {
    const std::string state_path = argc > 1 ? argv[1] : "";
    const Tables tb = Tables::load("data");

    Gate gate;

    // ---- criterion 1: four-circulant table golden rebuild ----------------
    gate.run(1, 900, "four-circulant table rebuild", [&]() -> Outcome {
        for (const Table1Row& row : tb.t1) {
            const LinearCode c = four_circulant_code(row.ra, row.rb, true);
            if (parity_class(c) != ParityClass::SinglyEven)
                return row.id + ": not singly even";
            const WeightDistribution& wd = c.weight_distribution();
            if (wd.min_nonzero() != 12) return row.id + ": d != 12";
            const int beta =
                (static_cast<int>(wd.a[12]) - 1312) / 16;
            if (beta != row.beta)
                return row.id + ": beta " + std::to_string(beta) + " != " +
                       std::to_string(row.beta);
        }
        return {};
    });

    // ---- criteria 2 + 3: the order-16 classification ---------------------
    SearchResult search;
    gate.run(2, 28800, "order-16 d=12 classification", [&]() -> Outcome {
        SearchOptions opts;
        opts.state_file = state_path;
        search = search_four_circulant(16, {10, 12}, opts);
        const auto& d12 = search.classes[1].second;
        if (search.classes[1].first != 12) return "class table order broke";
        if (d12.size() != 67)
            return "found " + std::to_string(d12.size()) + " classes, expected 67";
        std::map<int, int> got, expect;
        for (const FourCirculantClass& cls : d12) ++got[beta_of(cls.code)];
        for (const Table1Row& row : tb.t1) ++expect[row.beta];
        if (got != expect)
            return "beta multiset " + join_counts(got) + "!= " + join_counts(expect);
        return {};
    });

    gate.run(3, 28800, "order-16 d=10 classification", [&]() -> Outcome {
        if (search.classes.empty()) return "search unavailable";
        const auto& d10 = search.classes[0].second;
        if (search.classes[0].first != 10) return "class table order broke";
        if (d10.size() != 224)
            return "found " + std::to_string(d10.size()) + " classes, expected 224";
        return {};
    });

    // ---- criterion 4: neighbor table golden rebuild ----------------------
    gate.run(4, 600, "neighbor table rebuild", [&]() -> Outcome {
        std::set<std::pair<int, int>> new_enumerators;
        for (const Table2Row& row : tb.t2) {
            const LinearCode& d = tb.code(row.id);
            if (!d.is_self_dual()) return row.id + ": not self-dual";
            if (parity_class(d) != ParityClass::SinglyEven)
                return row.id + ": not singly even";
            if (d.min_weight() != 12) return row.id + ": d != 12";
            const EnumeratorClass ec = classify_enumerator(d);
            const int family = ec.family == EnumeratorFamily::W64_1 ? 1 : 2;
            if (family != row.family || !ec.beta || *ec.beta != row.beta)
                return row.id + ": enumerator mismatch";
            new_enumerators.emplace(family, row.beta);
        }
        for (auto [f, b] : std::vector<std::pair<int, int>>{
                 {1, 35}, {2, 19}, {2, 34}, {2, 42}, {2, 45}, {2, 50}})
            if (!new_enumerators.count({f, b}))
                return "missing enumerator (" + std::to_string(f) + "," +
                       std::to_string(b) + ")";
        return {};
    });

    // ---- criterion 5: covering-radius certificates -----------------------
    std::vector<std::string> cr_parents = {"C64_1", "C64_2", "C64_3"};
    for (const Table2Row& row : tb.t2)
        if (row.family == 2 && row.beta == 0) cr_parents.push_back(row.id);

    gate.run(5, 1800, "covering radius 12 certificates", [&]() -> Outcome {
        if (cr_parents.size() != 22)
            return "expected 22 shadow-minimum-12 parents, found " +
                   std::to_string(cr_parents.size());
        for (const std::string& id : cr_parents) {
            const auto [r1, r2] = certify_cr12(tb.code(id));
            for (const CoveringCertificate* cert : {&r1, &r2})
                if (!cert->conclusion || *cert->conclusion != 12)
                    return id + ": certificate inconclusive (" + cert->to_report() + ")";
        }
        return {};
    });

    // ---- criterion 6: doubly even pool equivalences ----------------------
    gate.run(6, 3600, "doubly even neighbor pool", [&]() -> Outcome {
        std::vector<LinearCode> pool;
        std::vector<std::string> parent_of;
        for (const std::string& id : cr_parents) {
            auto [d1, d2] = doubly_even_neighbors(tb.code(id));
            pool.push_back(d1);
            parent_of.push_back(id);
            pool.push_back(d2);
            parent_of.push_back(id);
        }
        if (pool.size() != 44) return "pool size != 44";

        // the published supports rebuild one of the two neighbors exactly
        for (const std::string& j : {"68", "84", "95", "143"})
            for (const char* side : {"_1", "_2"}) {
                const LinearCode& de = tb.code("DE64_" + j + side);
                bool matched = false;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (parent_of[i] == "D64_" + j && pool[i] == de) matched = true;
                if (!matched) return "DE64_" + j + side + " is not a computed neighbor";
            }

        const auto classes = partition_classes(pool);
        if (classes.size() != 40)
            return "found " + std::to_string(classes.size()) + " classes, expected 40";
        const std::set<std::set<std::string>> expect_merges{
            {"D64_22", "D64_68"},
            {"D64_33", "D64_84"},
            {"D64_44", "D64_95"},
            {"D64_136", "D64_143"}};
        std::set<std::set<std::string>> merges;
        for (const auto& cls : classes) {
            if (cls.size() == 1) continue;
            if (cls.size() > 2) return "a class merged more than two codes";
            merges.insert({parent_of[cls[0]], parent_of[cls[1]]});
        }
        if (merges != expect_merges) return "merged pairs differ from the published four";
        return {};
    });

    // ---- criterion 7: two-coordinate extensions --------------------------
    gate.run(7, 300, "two-coordinate extensions", [&]() -> Outcome {
        std::map<int, std::set<int>> got;
        for (const Table4Row& row : tb.t4) {
            const LinearCode ext = tsai_extend(tb.code(row.parent), table4_x(row));
            if (ext.n() != 66 || ext.k() != 33 || !ext.is_self_dual())
                return row.id + ": not a self-dual [66,33] code";
            if (ext.min_weight() != 12) return row.id + ": d != 12";
            const EnumeratorClass ec = classify_enumerator(ext);
            const int family = ec.family == EnumeratorFamily::W66_1   ? 1
                               : ec.family == EnumeratorFamily::W66_2 ? 2
                                                                      : 3;
            if (family != row.family || !ec.beta || *ec.beta != row.beta)
                return row.id + ": enumerator mismatch";
            got[family].insert(*ec.beta);
        }
        const std::map<int, std::set<int>> expect{{1, {7, 58, 70, 91, 93}},
                                                  {3, {22, 23}}};
        if (got != expect) return "extension classes differ from the published seven";
        return {};
    });

    // ---- criterion 8: weight-10 elimination ------------------------------
    gate.run(8, 3600, "weight-10 elimination on d=10 representatives", [&]() -> Outcome {
        if (search.classes.empty()) return "search unavailable";
        const auto& d10 = search.classes[0].second;
        if (d10.size() != 224) return "d=10 classification unavailable";
        for (const FourCirculantClass& cls : d10) {
            const std::string id =
                cls.rep.ra.to_string() + "," + cls.rep.rb.to_string();
            const auto res = weight10_neighbor_vector(cls.code);
            if (!res) return id + ": no even-weight solution";
            if (!res->unique_mod_code) return id + ": solution not unique";
            if (res->c0.n() != 64 || res->c0.k() != 31)
                return id + ": C0 is not [64,31]";
            if (!res->c0.is_self_orthogonal()) return id + ": C0 not self-orthogonal";
            for (const BitVector& r : res->c0.generator().row_list())
                if (r.weight() % 4 != 0) return id + ": C0 not doubly even";
            if (res->c0.min_weight() != 12) return id + ": C0 min weight != 12";
            for (const LinearCode* d : {&res->d1, &res->d2}) {
                if (!d->is_self_dual()) return id + ": neighbor not self-dual";
                if (parity_class(*d) != ParityClass::DoublyEven)
                    return id + ": neighbor not doubly even";
            }
        }
        return {};
    });

    // ---- criterion 9: independent oracles --------------------------------
    gate.run(9, 120, "oracle suites", [&]() -> Outcome {
        test::Rng rng(0xacce97);

        // Brouwer-Zimmermann minimum weight vs full enumeration
        for (int t = 0; t < 200; ++t) {
            const int k = 1 + static_cast<int>(rng() % 16);
            const int n = k + 1 + static_cast<int>(rng() % (32 - k));
            const LinearCode c = test::random_code(rng, n, k);
            int direct = n + 1;
            for (const BitVector& w : test::all_codewords(c))
                if (!w.is_zero()) direct = std::min(direct, static_cast<int>(w.weight()));
            if (c.min_weight() != direct) return "minimum-weight oracle mismatch";
        }

        // canonical-form equivalence vs brute-force permutation search
        for (int t = 0; t < 100; ++t) {
            const int n = 5 + static_cast<int>(rng() % 8); // 5..12
            const int k = 2 + static_cast<int>(rng() % 3);
            const LinearCode a = test::random_code(rng, n, k);
            LinearCode b = a;
            if (t % 2) {
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                std::shuffle(perm.begin(), perm.end(), rng);
                b = a.permuted(perm);
            } else {
                b = test::random_code(rng, n, k);
            }
            if (are_equivalent(a, b) != test::bf_equivalent(a, b))
                return "equivalence oracle mismatch";
        }

        // MacWilliams fixed point on self-dual codes (incl. cached length-64
        // distributions from criterion 1)
        std::vector<LinearCode> sd = {test::e8(), test::golay24(), test::i2n(8),
                                      test::i2n(12), tb.code("C64_1")};
        for (int t = 0; t < 5; ++t) sd.push_back(test::random_self_dual(rng, 12));
        for (const LinearCode& c : sd) {
            const WeightDistribution& wd = c.weight_distribution();
            if (macwilliams_transform(wd, c.k()) != wd) return "MacWilliams fixed point broke";
        }

        // shadow weight residues on every table code
        for (const Table1Row& row : tb.t1) {
            auto [s1, s3] = shadow_half_reps(tb.code(row.id));
            if (s1.weight() % 4 != 0 || s3.weight() % 4 != 0)
                return row.id + ": shadow residue != 0 mod 4";
        }
        for (const Table2Row& row : tb.t2) {
            auto [s1, s3] = shadow_half_reps(tb.code(row.id));
            if (s1.weight() % 4 != 0 || s3.weight() % 4 != 0)
                return row.id + ": shadow residue != 0 mod 4";
        }
        for (const Table4Row& row : tb.t4) {
            auto [s1, s3] = shadow_half_reps(tb.code(row.id));
            if (s1.weight() % 4 != 1 || s3.weight() % 4 != 1)
                return row.id + ": shadow residue != 1 mod 4";
        }

        // exact covering radius vs the Delsarte bound on classic codes
        if (covering_radius_exact(test::golay24()) != 4) return "Golay CR != 4";
        if (delsarte_bound(test::golay24()) != 4) return "Golay Delsarte bound != 4";
        if (covering_radius_exact(test::e8()) != 2) return "extended Hamming CR != 2";
        if (covering_radius_exact(test::e8()) > delsarte_bound(test::e8()))
            return "CR exceeds the Delsarte bound";
        return {};
    });

    if (gate.failures) {
        std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
        return 1;
    }
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
}
