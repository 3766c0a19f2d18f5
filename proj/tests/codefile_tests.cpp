#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <sdc/codefile.hpp>

#include "helpers.hpp"

using namespace sdc;

TEST_SUITE("codefile") {

TEST_CASE("write/read round trip preserves the code") {
    test::Rng rng(229);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(rng() % 40); // odd lengths included
        const int k = 1 + static_cast<int>(rng() % n);
        const LinearCode c = test::random_code(rng, n, k);
        std::ostringstream os;
        write_code_file(os, c, "round trip");
        std::istringstream is(os.str());
        const LinearCode back = read_code_file(is);
        CHECK(back == c);
        CHECK(back.n() == n);
        CHECK(back.k() == k);
    }
}

TEST_CASE("file layout is the documented hex format") {
    std::ostringstream os;
    write_code_file(os, test::e8());
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "8 4");
    std::vector<std::string> rows;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    CHECK(rows == std::vector<std::string>{"87", "4b", "2d", "1e"});
}

TEST_CASE("comments appear as # lines before the header") {
    std::ostringstream os;
    write_code_file(os, test::e8(), "extended Hamming");
    CHECK(os.str().rfind("# extended Hamming\n", 0) == 0);
    std::istringstream is(os.str());
    CHECK(read_code_file(is) == test::e8());
}

TEST_CASE("malformed inputs are rejected") {
    auto reject = [](const std::string& text) {
        std::istringstream is(text);
        CHECK_THROWS_AS((void)read_code_file(is), CodeError);
    };
    reject("");
    reject("8\n87\n");              // header missing k
    reject("8 4\n87\n4b\n2d\n");    // too few rows
    reject("8 4\n87\n4b\n2d\nzz\n"); // non-hex digits
    reject("8 4\n87\n4b\n2d\n1ef\n"); // wrong digit count
    reject("8 5\n87\n4b\n2d\n1e\n33\n"); // dependent rows: rank < k
    reject("5 1\n07\n");            // pad bits set beyond length 5
    reject("0 0\n");
}

TEST_CASE("path-based helpers hit the filesystem") {
    const std::string path =
        (std::filesystem::temp_directory_path() / "sdc_codefile_test.code").string();
    write_code_file(path, test::golay24(), "golay");
    const LinearCode back = read_code_file(path);
    CHECK(back == test::golay24());
    std::filesystem::remove(path);
    CHECK_THROWS_AS((void)read_code_file(path), CodeError);
}

} // TEST_SUITE
