// sdcode: command-line surface over the self-dual code library.
//
// Exit codes: 0 = all checks pass, 1 = verification mismatch,
// 2 = usage or input error, 3 = resource budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <sdc/circulant.hpp>
#include <sdc/codefile.hpp>
#include <sdc/covering.hpp>
#include <sdc/equivalence.hpp>
#include <sdc/extend.hpp>
#include <sdc/neighbors.hpp>
#include <sdc/tables.hpp>
#include <sdc/weights.hpp>

using nlohmann::json;

namespace {

struct Globals {
    int threads = 0;
    std::string data_dir = "data";
    bool json_out = false;

    mutable std::unique_ptr<sdc::Tables> tables_;

    const sdc::Tables& tables() const {
        if (!tables_) tables_ = std::make_unique<sdc::Tables>(sdc::Tables::load(data_dir));
        return *tables_;
    }
};

// A code argument is either a path to a code file or a bundled table id.
sdc::LinearCode resolve_code(const Globals& g, const std::string& arg) {
    if (std::ifstream probe(arg); probe.good()) return sdc::read_code_file(arg);
    return g.tables().code(arg);
}

int family_index(sdc::EnumeratorFamily f) {
    switch (f) {
        case sdc::EnumeratorFamily::W64_1:
        case sdc::EnumeratorFamily::W66_1: return 1;
        case sdc::EnumeratorFamily::W64_2:
        case sdc::EnumeratorFamily::W66_2: return 2;
        case sdc::EnumeratorFamily::W66_3: return 3;
    }
    return 0;
}

const char* parity_name(sdc::ParityClass p) {
    switch (p) {
        case sdc::ParityClass::DoublyEven: return "doubly-even";
        case sdc::ParityClass::SinglyEven: return "singly-even";
        default: return "not-self-orthogonal";
    }
}

// Report basics plus the enumerator classification when one applies.
json describe(const sdc::LinearCode& c) {
    json j;
    j["n"] = c.n();
    j["k"] = c.k();
    j["d"] = c.min_weight();
    const bool sd = c.is_self_dual();
    j["self_dual"] = sd;
    if (sd) {
        const sdc::ParityClass p = sdc::parity_class(c);
        j["parity"] = parity_name(p);
        if (p == sdc::ParityClass::SinglyEven) j["shadow_d"] = sdc::shadow(c).min_weight;
        try {
            const sdc::EnumeratorClass e = sdc::classify_enumerator(c);
            j["family"] = sdc::family_name(e.family);
            j["family_index"] = family_index(e.family);
            if (e.beta) j["beta"] = *e.beta;
        } catch (const sdc::CodeError&) {
            // not an extremal length-64/66 code; no family to report
        }
    }
    return j;
}

void print_describe(const json& j) {
    std::ostringstream os;
    os << "[" << j["n"].get<int>() << "," << j["k"].get<int>() << "," << j["d"].get<int>() << "]";
    if (j.value("self_dual", false)) {
        os << " self-dual " << j["parity"].get<std::string>();
        if (j.contains("shadow_d")) os << " shadow_d=" << j["shadow_d"].get<int>();
        if (j.contains("family")) {
            os << " " << j["family"].get<std::string>();
            if (j.contains("beta")) os << " beta=" << j["beta"].get<int>();
        }
    }
    std::cout << os.str() << "\n";
    if (j.contains("family_index") && j.contains("beta"))
        std::cout << "report (" << j["family_index"].get<int>() << ", " << j["beta"].get<int>()
                  << ")\n";
}

int cmd_classify(const Globals& g, int order, std::vector<int> targets, const std::string& state,
                 const std::string& out, bool progress) {
    sdc::SearchOptions opts;
    opts.threads = g.threads;
    opts.state_file = state;
    opts.progress = progress;
    const sdc::SearchResult res = sdc::search_four_circulant(order, targets, opts);

    std::ostringstream csv;
    csv << "id,r_A,r_B,beta\n";
    std::size_t total = 0;
    json jclasses = json::array();
    for (const auto& [d, classes] : res.classes) {
        int idx = 0;
        for (const sdc::FourCirculantClass& cls : classes) {
            ++idx;
            ++total;
            std::string beta;
            if (cls.code.n() == 64 && d == sdc::rains_bound(64)) {
                const auto a12 =
                    static_cast<long long>(sdc::codewords_of_weight(cls.code, 12).size());
                if ((a12 - 1312) % 16 == 0) beta = std::to_string((a12 - 1312) / 16);
            }
            const std::string id = "d" + std::to_string(d) + "_" + std::to_string(idx);
            csv << id << "," << cls.rep.ra.to_string() << "," << cls.rep.rb.to_string() << ","
                << beta << "\n";
            if (g.json_out)
                jclasses.push_back({{"id", id},
                                    {"d", d},
                                    {"r_A", cls.rep.ra.to_string()},
                                    {"r_B", cls.rep.rb.to_string()},
                                    {"beta", beta.empty() ? json() : json(std::stol(beta))},
                                    {"orbits", cls.members.size()}});
        }
    }
    if (out.empty() || out == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream os(out);
        if (!os) throw sdc::CodeError(sdc::Errc::BadInput, "cannot write " + out);
        os << csv.str();
    }
    if (g.json_out)
        std::cout << json{{"order", order},
                          {"classes", total},
                          {"candidates_scanned", res.candidates_scanned},
                          {"survivors", res.survivors},
                          {"rows", jclasses}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "classes=" << total << "\n";
    return 0;
}

struct RowCheck {
    std::string id;
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        detail = detail.empty() ? why : detail + "; " + why;
    }
};

template <typename Row, typename Fn>
int run_verify(const Globals& g, const std::vector<Row>& rows, int table, Fn&& check) {
    std::size_t passed = 0;
    json jrows = json::array();
    for (const Row& row : rows) {
        RowCheck rc;
        rc.id = row.id;
        try {
            check(row, rc);
        } catch (const sdc::CodeError& e) {
            rc.fail(std::string(sdc::errc_name(e.kind())) + ": " + e.what());
        }
        if (rc.pass) ++passed;
        if (g.json_out)
            jrows.push_back({{"id", rc.id}, {"pass", rc.pass}, {"detail", rc.detail}});
        else
            std::cout << rc.id << ": " << (rc.pass ? "PASS" : "FAIL (" + rc.detail + ")") << "\n";
    }
    if (g.json_out)
        std::cout << json{{"table", table},
                          {"passed", passed},
                          {"total", rows.size()},
                          {"rows", jrows}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "passed=" << passed << "/" << rows.size() << "\n";
    return passed == rows.size() ? 0 : 1;
}

int cmd_verify(const Globals& g, int table) {
    const sdc::Tables& t = g.tables();
    // Common checks for a singly even extremal code of length 64 or 66.
    auto check_se = [&](const std::string& id, int family, int beta, RowCheck& rc) {
        const sdc::LinearCode& c = t.code(id);
        if (!c.is_self_dual()) rc.fail("not self-dual");
        const sdc::WeightDistribution w = c.weight_distribution();
        if (w.min_nonzero() != 12)
            rc.fail("min weight " + std::to_string(w.min_nonzero()) + " != 12");
        if (!rc.pass) return;
        if (sdc::parity_class(c) != sdc::ParityClass::SinglyEven) rc.fail("not singly even");
        const sdc::EnumeratorClass e = sdc::classify_enumerator(c);
        if (family != 0 && family_index(e.family) != family)
            rc.fail("family " + std::to_string(family_index(e.family)) + " != " +
                    std::to_string(family));
        const int b = e.beta.value_or(-1);
        if (b != beta) rc.fail("beta " + std::to_string(b) + " != " + std::to_string(beta));
    };
    switch (table) {
        case 1:
            return run_verify(g, t.t1, 1, [&](const sdc::Table1Row& row, RowCheck& rc) {
                check_se(row.id, 0, row.beta, rc);
            });
        case 2:
            return run_verify(g, t.t2, 2, [&](const sdc::Table2Row& row, RowCheck& rc) {
                check_se(row.id, row.family, row.beta, rc);
            });
        case 3:
            return run_verify(g, t.t3, 3, [&](const sdc::Table3Row& row, RowCheck& rc) {
                const sdc::LinearCode& c = t.code(row.id);
                if (!c.is_self_dual()) rc.fail("not self-dual");
                if (sdc::parity_class(c) != sdc::ParityClass::DoublyEven)
                    rc.fail("not doubly even");
                const int d = c.min_weight();
                if (d != 12) rc.fail("min weight " + std::to_string(d) + " != 12");
            });
        case 4:
            return run_verify(g, t.t4, 4, [&](const sdc::Table4Row& row, RowCheck& rc) {
                check_se(row.id, row.family, row.beta, rc);
            });
        default:
            throw sdc::CodeError(sdc::Errc::BadInput, "no such table: " + std::to_string(table));
    }
}

int cmd_neighbor(const Globals& g, const std::string& code_arg, const std::string& support,
                 const std::string& out) {
    const sdc::LinearCode c = resolve_code(g, code_arg);
    const sdc::BitVector x =
        sdc::BitVector::from_support(c.n(), sdc::parse_support(support));
    const sdc::LinearCode d = sdc::neighbor(c, x);
    if (!out.empty())
        sdc::write_code_file(out, d, "neighbor of " + code_arg + " at " + support);
    const json j = describe(d);
    if (g.json_out)
        std::cout << json{{"neighbor", j}, {"out", out}}.dump(2) << "\n";
    else
        print_describe(j);
    return 0;
}

int cmd_extend(const Globals& g, const std::string& code_arg, std::string xbits,
               const std::string& out) {
    const sdc::LinearCode c = resolve_code(g, code_arg);
    // A 32-character x is completed with ones, matching the published tables.
    if (static_cast<int>(xbits.size()) == c.n() / 2)
        xbits += std::string(c.n() - xbits.size(), '1');
    const sdc::BitVector x = sdc::BitVector::from_string(xbits);
    const sdc::LinearCode e = sdc::tsai_extend(c, x);
    if (!out.empty()) sdc::write_code_file(out, e, "extension of " + code_arg);
    const json j = describe(e);
    if (g.json_out)
        std::cout << json{{"extension", j}, {"out", out}}.dump(2) << "\n";
    else
        print_describe(j);
    return 0;
}

int cmd_equiv(const Globals& g, const std::string& a_arg, const std::string& b_arg) {
    const sdc::LinearCode a = resolve_code(g, a_arg);
    const sdc::LinearCode b = resolve_code(g, b_arg);
    const bool eq = sdc::are_equivalent(a, b);
    if (g.json_out)
        std::cout << json{{"equivalent", eq}}.dump(2) << "\n";
    else
        std::cout << (eq ? "equivalent" : "inequivalent") << "\n";
    return eq ? 0 : 1;
}

int cmd_cr(const Globals& g, const std::string& code_arg, bool certify, bool exact,
           const std::string& coset) {
    const sdc::LinearCode c = resolve_code(g, code_arg);
    if (certify) {
        const auto [c1, c2] = sdc::certify_cr12(c);
        if (g.json_out)
            std::cout << json{{"D1", c1.to_report()}, {"D2", c2.to_report()}}.dump(2) << "\n";
        else
            std::cout << "D1: " << c1.to_report() << "\nD2: " << c2.to_report() << "\n";
        return (c1.conclusion && c2.conclusion) ? 0 : 1;
    }
    if (exact) {
        const int r = sdc::covering_radius_exact(c);
        if (g.json_out)
            std::cout << json{{"covering_radius", r}}.dump(2) << "\n";
        else
            std::cout << "covering radius = " << r << "\n";
        return 0;
    }
    if (!coset.empty()) {
        const sdc::BitVector v =
            sdc::BitVector::from_support(c.n(), sdc::parse_support(coset));
        const int w = sdc::coset_min_weight(c, v);
        if (g.json_out)
            std::cout << json{{"coset_min_weight", w}}.dump(2) << "\n";
        else
            std::cout << "coset minimum weight = " << w << "\n";
        return 0;
    }
    const int b = sdc::delsarte_bound(c);
    if (g.json_out)
        std::cout << json{{"delsarte_bound", b}}.dump(2) << "\n";
    else
        std::cout << "delsarte bound = " << b << "\n";
    return 0;
}

int cmd_info(const Globals& g, const std::string& code_arg) {
    const json j = describe(resolve_code(g, code_arg));
    if (g.json_out)
        std::cout << j.dump(2) << "\n";
    else
        print_describe(j);
    return 0;
}

int cmd_table(const Globals& g, int list, const std::string& emit, const std::string& out) {
    const sdc::Tables& t = g.tables();
    if (!emit.empty()) {
        const std::string path = out.empty() ? emit + ".code" : out;
        sdc::write_code_file(path, t.code(emit), emit);
        if (g.json_out)
            std::cout << json{{"id", emit}, {"out", path}}.dump(2) << "\n";
        else
            std::cout << "wrote " << path << "\n";
        return 0;
    }
    json rows = json::array();
    switch (list) {
        case 1:
            for (const auto& r : t.t1)
                rows.push_back({{"id", r.id},
                                {"r_A", r.ra.to_string()},
                                {"r_B", r.rb.to_string()},
                                {"beta", r.beta}});
            break;
        case 2:
            for (const auto& r : t.t2)
                rows.push_back({{"id", r.id},
                                {"parent", r.parent},
                                {"support", sdc::render_support(r.support)},
                                {"family", r.family},
                                {"beta", r.beta}});
            break;
        case 3:
            for (const auto& r : t.t3)
                rows.push_back({{"id", r.id},
                                {"parent", r.parent},
                                {"support", sdc::render_support(r.support)}});
            break;
        case 4:
            for (const auto& r : t.t4)
                rows.push_back({{"id", r.id},
                                {"parent", r.parent},
                                {"x", r.x32},
                                {"family", r.family},
                                {"beta", r.beta}});
            break;
        default:
            throw sdc::CodeError(sdc::Errc::BadInput, "no such table: " + std::to_string(list));
    }
    if (g.json_out) {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            std::string line = r["id"].get<std::string>();
            for (const auto& [key, val] : r.items())
                if (key != "id")
                    line += " " + key + "=" +
                            (val.is_string() ? val.get<std::string>() : val.dump());
            std::cout << line << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Globals g;
    CLI::App app{"self-dual binary code toolkit"};
    app.require_subcommand(1);
    app.add_option("--threads", g.threads, "worker threads (default: SDCODE_THREADS or all)");
    app.add_option("--data", g.data_dir, "directory with the bundled table CSVs")
        ->capture_default_str();
    app.add_flag("--json", g.json_out, "machine-readable JSON output");

    int rc = 0;
    auto run = [&](auto fn) {
        return [&g, &rc, fn]() {
            if (g.threads > 0) sdc::set_thread_count(g.threads);
            rc = fn();
        };
    };

    auto* classify = app.add_subcommand("classify", "search four-circulant codes and classify");
    {
        auto order = std::make_shared<int>(16);
        auto targets = std::make_shared<std::vector<int>>();
        auto state = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto progress = std::make_shared<bool>(false);
        classify->add_option("--order", *order, "circulant order n (code length 4n)")
            ->capture_default_str();
        classify->add_option("--d", *targets, "target minimum weight(s)")->required();
        classify->add_option("--state", *state, "resumable checkpoint file");
        classify->add_option("--out", *out, "CSV output path (default stdout)");
        classify->add_flag("--progress", *progress, "progress lines on stderr");
        classify->callback(run([&g, order, targets, state, out, progress]() {
            return cmd_classify(g, *order, *targets, *state, *out, *progress);
        }));
    }

    auto* verify = app.add_subcommand("verify", "rebuild and check the bundled tables");
    {
        auto table = std::make_shared<int>(0);
        verify->add_option("--table", *table, "table number (1-4)")->required();
        verify->callback(run([&g, table]() { return cmd_verify(g, *table); }));
    }

    auto* nbr = app.add_subcommand("neighbor", "self-dual neighbor at a support");
    {
        auto code = std::make_shared<std::string>();
        auto support = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        nbr->add_option("--code", *code, "code file or table id")->required();
        nbr->add_option("--support", *support, "1-based support of x, comma separated")
            ->required();
        nbr->add_option("--out", *out, "write the neighbor as a code file");
        nbr->callback(run([&g, code, support, out]() {
            return cmd_neighbor(g, *code, *support, *out);
        }));
    }

    auto* ext = app.add_subcommand("extend", "two-coordinate extension");
    {
        auto code = std::make_shared<std::string>();
        auto xbits = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        ext->add_option("--code", *code, "code file or table id")->required();
        ext->add_option("--x", *xbits, "extension vector bits (n, or n/2 completed with ones)")
            ->required();
        ext->add_option("--out", *out, "write the extension as a code file");
        ext->callback(
            run([&g, code, xbits, out]() { return cmd_extend(g, *code, *xbits, *out); }));
    }

    auto* eqv = app.add_subcommand("equiv", "decide permutation equivalence");
    {
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        eqv->add_option("a", *a, "code file or table id")->required();
        eqv->add_option("b", *b, "code file or table id")->required();
        eqv->callback(run([&g, a, b]() { return cmd_equiv(g, *a, *b); }));
    }

    auto* cr = app.add_subcommand("cr", "covering-radius bounds and certificates");
    {
        auto code = std::make_shared<std::string>();
        auto certify = std::make_shared<bool>(false);
        auto exact = std::make_shared<bool>(false);
        auto coset = std::make_shared<std::string>();
        cr->add_option("--code", *code, "code file or table id")->required();
        cr->add_flag("--certify-de-neighbors", *certify,
                     "certify CR = 12 for both doubly even neighbors");
        cr->add_flag("--exact", *exact, "exact covering radius (small redundancy only)");
        cr->add_option("--coset", *coset, "lower bound: coset minimum weight at this support");
        cr->callback(run([&g, code, certify, exact, coset]() {
            return cmd_cr(g, *code, *certify, *exact, *coset);
        }));
    }

    auto* info = app.add_subcommand("info", "basic parameters of a code");
    {
        auto code = std::make_shared<std::string>();
        info->add_option("code", *code, "code file or table id")->required();
        info->callback(run([&g, code]() { return cmd_info(g, *code); }));
    }

    auto* table = app.add_subcommand("table", "list bundled tables or emit a code file");
    {
        auto list = std::make_shared<int>(0);
        auto emit = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        table->add_option("--list", *list, "print the rows of a table (1-4)");
        table->add_option("--emit", *emit, "write the code of a table id");
        table->add_option("--out", *out, "output path for --emit");
        table->callback(
            run([&g, list, emit, out]() { return cmd_table(g, *list, *emit, *out); }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sdc::CodeError& e) {
        std::cerr << "error: " << e.what() << " [" << sdc::errc_name(e.kind()) << "]\n";
        return e.kind() == sdc::Errc::TooLarge ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
