#include "sdc/codefile.hpp"

#include <fstream>
#include <sstream>

namespace sdc {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void write_code_file(std::ostream& os, const LinearCode& c, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string line;
        while (std::getline(cs, line)) os << "# " << line << "\n";
    }
    os << c.n() << " " << c.k() << "\n";
    for (std::size_t i = 0; i < c.generator().rows(); ++i)
        os << c.generator().row(i).to_hex() << "\n";
}

void write_code_file(const std::string& path, const LinearCode& c, const std::string& comment) {
    std::ofstream f(path);
    if (!f) throw CodeError(Errc::BadInput, "cannot open " + path + " for writing");
    write_code_file(f, c, comment);
}

LinearCode read_code_file(std::istream& is) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            line = trimmed(line);
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw CodeError(Errc::BadInput, "code file: missing 'n k' header");
    std::istringstream hs(line);
    long long n = 0, k = 0;
    if (!(hs >> n >> k) || n < 1 || k < 1 || k > n)
        throw CodeError(Errc::BadInput, "code file: bad 'n k' header '" + line + "'");
    std::string rest;
    if (hs >> rest) throw CodeError(Errc::BadInput, "code file: trailing data after 'n k' header");
    BitMatrix rows(0, static_cast<std::size_t>(n));
    for (long long i = 0; i < k; ++i) {
        if (!next_line())
            throw CodeError(Errc::BadInput, "code file: expected " + std::to_string(k) + " rows");
        rows.append_row(BitVector::from_hex(static_cast<std::size_t>(n), line));
    }
    return LinearCode(rows);
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CodeError(Errc::BadInput, "cannot open " + path);
    return read_code_file(f);
}

} // namespace sdc
