#include "sdc/tables.hpp"

#include <fstream>
#include <sstream>

#include "sdc/extend.hpp"
#include "sdc/neighbors.hpp"

namespace sdc {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(trimmed(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(trimmed(cur));
    return out;
}

// Data rows of a CSV file: the header line and '#' comments are dropped.
std::vector<std::vector<std::string>> read_csv(const std::string& path, std::size_t fields) {
    std::ifstream f(path);
    if (!f) throw CodeError(Errc::BadInput, "cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(f, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto cols = split_fields(line);
        if (cols.size() != fields)
            throw CodeError(Errc::BadInput,
                            path + ": expected " + std::to_string(fields) + " fields, got " +
                                std::to_string(cols.size()) + " in '" + line + "'");
        rows.push_back(std::move(cols));
    }
    return rows;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw CodeError(Errc::BadInput, "bad integer '" + s + "' in " + what);
    }
    if (used != s.size()) throw CodeError(Errc::BadInput, "bad integer '" + s + "' in " + what);
    return v;
}

} // namespace

std::vector<int> parse_support(std::string_view s) {
    std::string norm(s);
    for (char& ch : norm)
        if (ch == ',') ch = ' ';
    std::istringstream is(norm);
    std::vector<int> out;
    long long v = 0;
    while (is >> v) {
        if (v < 1) throw CodeError(Errc::BadInput, "support coordinates are 1-based positives");
        out.push_back(static_cast<int>(v));
    }
    if (!is.eof()) throw CodeError(Errc::BadInput, "bad support list '" + norm + "'");
    return out;
}

std::string render_support(const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(s[i]);
    }
    return out;
}

BitVector table4_x(const Table4Row& row) {
    if (row.x32.size() != 32)
        throw CodeError(Errc::BadInput, row.id + ": x32 must have exactly 32 bits");
    BitVector x(64);
    for (int i = 0; i < 32; ++i) {
        const char ch = row.x32[static_cast<std::size_t>(i)];
        if (ch != '0' && ch != '1')
            throw CodeError(Errc::BadInput, row.id + ": x32 must be binary");
        if (ch == '1') x.set(static_cast<std::size_t>(i));
    }
    for (int i = 32; i < 64; ++i) x.set(static_cast<std::size_t>(i));
    return x;
}

Tables Tables::load(const std::string& data_dir) {
    Tables t;
    for (const auto& cols : read_csv(data_dir + "/table1.csv", 4)) {
        Table1Row r;
        r.id = cols[0];
        r.ra = CirculantRow::from_string(cols[1]);
        r.rb = CirculantRow::from_string(cols[2]);
        r.beta = parse_int(cols[3], "table1 beta");
        t.t1.push_back(std::move(r));
    }
    for (const auto& cols : read_csv(data_dir + "/table2.csv", 5)) {
        Table2Row r;
        r.id = cols[0];
        r.parent = cols[1];
        r.support = parse_support(cols[2]);
        r.family = parse_int(cols[3], "table2 family");
        r.beta = parse_int(cols[4], "table2 beta");
        t.t2.push_back(std::move(r));
    }
    for (const auto& cols : read_csv(data_dir + "/table3.csv", 3)) {
        Table3Row r;
        r.id = cols[0];
        r.parent = cols[1];
        r.support = parse_support(cols[2]);
        t.t3.push_back(std::move(r));
    }
    for (const auto& cols : read_csv(data_dir + "/table4.csv", 5)) {
        Table4Row r;
        r.id = cols[0];
        r.parent = cols[1];
        r.x32 = cols[2];
        r.family = parse_int(cols[3], "table4 family");
        r.beta = parse_int(cols[4], "table4 beta");
        t.t4.push_back(std::move(r));
    }
    return t;
}

const Table1Row& Tables::t1_row(const std::string& id) const {
    for (const auto& r : t1)
        if (r.id == id) return r;
    throw CodeError(Errc::BadInput, "unknown four-circulant id " + id);
}

const Table2Row& Tables::t2_row(const std::string& id) const {
    for (const auto& r : t2)
        if (r.id == id) return r;
    throw CodeError(Errc::BadInput, "unknown neighbor id " + id);
}

const Table4Row& Tables::t4_row(const std::string& id) const {
    for (const auto& r : t4)
        if (r.id == id) return r;
    throw CodeError(Errc::BadInput, "unknown extension id " + id);
}

const LinearCode& Tables::code(const std::string& id) const {
    auto it = cache_.find(id);
    if (it != cache_.end()) return it->second;

    LinearCode built = [&]() -> LinearCode {
        if (id.rfind("C64_", 0) == 0) {
            const Table1Row& r = t1_row(id);
            return four_circulant_code(r.ra, r.rb, true);
        }
        if (id.rfind("D64_", 0) == 0) {
            const Table2Row& r = t2_row(id);
            return neighbor(code(r.parent), BitVector::from_support(64, r.support));
        }
        if (id.rfind("DE64_", 0) == 0) {
            for (const auto& r : t3)
                if (r.id == id)
                    return neighbor(code(r.parent), BitVector::from_support(64, r.support));
            throw CodeError(Errc::BadInput, "unknown doubly even neighbor id " + id);
        }
        if (id.rfind("C66_", 0) == 0 || id.rfind("D66_", 0) == 0) {
            const Table4Row& r = t4_row(id);
            return tsai_extend(code(r.parent), table4_x(r));
        }
        throw CodeError(Errc::BadInput, "unknown code id " + id);
    }();

    return cache_.emplace(id, std::move(built)).first->second;
}

} // namespace sdc
