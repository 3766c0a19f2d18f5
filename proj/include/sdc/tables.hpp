#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdc/circulant.hpp"
#include "sdc/linear_code.hpp"

namespace sdc {

// Bundled machine-readable tables of the published codes, kept as CSV under
// data/.  Row ids use '_' separators: C64_1 .. C64_67 (four-circulant),
// D64_j (neighbors), DE64_i_1 / DE64_i_2 (doubly even neighbors with
// explicit supports), C66_i / D66_i (extensions).

struct Table1Row {
    std::string id;
    CirculantRow ra, rb;
    int beta = 0;
};

struct Table2Row {
    std::string id;      // D64_<i>
    std::string parent;  // C64_<j>
    std::vector<int> support;
    int family = 0;      // 1 or 2 (weight enumerator W64_family)
    int beta = 0;
};

struct Table3Row {
    std::string id;      // DE64_<i>_<1|2>
    std::string parent;  // D64_<i>
    std::vector<int> support;
};

struct Table4Row {
    std::string id;      // C66_<i> or D66_<i>
    std::string parent;  // C64_<j> or D64_<j>
    std::string x32;     // explicit first 32 bits; coordinates 33..64 are 1
    int family = 0;      // 1 or 3 (weight enumerator W66_family)
    int beta = 0;
};

struct Tables {
    std::vector<Table1Row> t1;
    std::vector<Table2Row> t2;
    std::vector<Table3Row> t3;
    std::vector<Table4Row> t4;

    static Tables load(const std::string& data_dir);

    // Build the code a row id denotes (recursing through parents); memoized.
    const LinearCode& code(const std::string& id) const;

    const Table1Row& t1_row(const std::string& id) const;
    const Table2Row& t2_row(const std::string& id) const;
    const Table4Row& t4_row(const std::string& id) const;

private:
    mutable std::map<std::string, LinearCode> cache_;
};

// Parse helpers shared by the CSV loader and the CLI.
std::vector<int> parse_support(std::string_view s);   // space- or comma-separated
std::string render_support(const std::vector<int>& s);

// The length-64 extension vector of a table-4 row: 32 explicit bits,
// then 32 ones.
BitVector table4_x(const Table4Row& row);

} // namespace sdc
