#pragma once

#include <iosfwd>
#include <string>

#include "sdc/linear_code.hpp"

namespace sdc {

// On-disk code format: a header line "n k" followed by k hex rows of
// ceil(n/4) digits each; coordinate 1 is the most significant bit of the
// first digit.  Lines starting with '#' are comments.
void write_code_file(std::ostream& os, const LinearCode& c, const std::string& comment = "");
void write_code_file(const std::string& path, const LinearCode& c, const std::string& comment = "");
LinearCode read_code_file(std::istream& is);
LinearCode read_code_file(const std::string& path);

} // namespace sdc
