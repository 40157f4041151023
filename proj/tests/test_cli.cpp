#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support/subprocess.hpp"

using testsupport::cli_path;
using testsupport::quoted;
using testsupport::run_command;

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

fs::path temp_file(const std::string& stem) {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("dedekind_cli_" + std::to_string(getpid()) + "_" + stem + "_" +
            std::to_string(counter++) + ".csv");
}

std::string golden_dir() {
    const char* dir = std::getenv("DEDEKIND_GOLDEN_DIR");
    REQUIRE(dir != nullptr);
    return dir;
}

} // namespace

TEST_CASE("eval prints canonical values") {
    auto r = run_command(cli_path() + " eval --mode sup " + quoted("(+inf) + (-inf)"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-inf\n");

    r = run_command(cli_path() + " eval --mode inf " + quoted("(+inf) - (+inf)"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-inf\n");

    r = run_command(cli_path() + " eval --mode sup " + quoted("(-inf) - (-inf)"));
    CHECK(r.output == "+inf\n");

    r = run_command(cli_path() + " eval --mode inf " + quoted("1/2 + 1/3"));
    CHECK(r.output == "5/6\n");
}

TEST_CASE("usage and parse failures exit with 2") {
    CHECK(run_command(cli_path() + " eval " + quoted("1 + 1")).exit_code == 2);
    CHECK(run_command(cli_path() + " eval --mode sup " + quoted("1 +")).exit_code == 2);
    CHECK(run_command(cli_path() + " eval --mode sideways " + quoted("1")).exit_code == 2);
    CHECK(run_command(cli_path() + " frobnicate").exit_code == 2);
    CHECK(run_command(cli_path() + " eval --mode sup " + quoted("-2 * 3")).exit_code == 2);
}

TEST_CASE("tables match the golden file") {
    const auto r = run_command(cli_path() + " tables");
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_file(fs::path(golden_dir()) / "tables.golden"));
    // spot checks straight from the acceptance wording
    CHECK(r.output.find("(+inf) - (-inf) = +inf") != std::string::npos);
    CHECK(r.output.find("(+inf) - (+inf) = -inf") != std::string::npos);
    CHECK(r.output.find("5 - +inf = -inf") != std::string::npos);
}

TEST_CASE("oracle runs clean, reproducibly, and fails when corrupted") {
    const auto first = run_command(cli_path() + " oracle");
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("all laws hold") != std::string::npos);

    const auto replay = run_command(cli_path() + " oracle --seed 42 --trials 200");
    CHECK(replay.output == first.output);

    const auto other_seed = run_command(cli_path() + " oracle --seed 7");
    CHECK(other_seed.exit_code == 0);
    CHECK(other_seed.output != first.output); // digest line differs

    const auto small = run_command(cli_path() + " oracle --trials 20 --bound 2 --denom 4");
    CHECK(small.exit_code == 0);

    const auto corrupted = run_command(cli_path() + " oracle --inject-fault");
    CHECK(corrupted.exit_code == 1);
    CHECK(corrupted.output.find("FAIL") != std::string::npos);
    CHECK(corrupted.output.find("claimed neutral") != std::string::npos);

    CHECK(run_command(cli_path() + " oracle --denom 0").exit_code == 2);
    CHECK(run_command(cli_path() + " oracle --bound -1").exit_code == 2);
}

TEST_CASE("infconv reproduces the identity on a one-point zero table") {
    const std::string abs_table =
        "x,value\n-2,2\n-1,1\n0,0\n1,1\n2,2\n";
    const auto f1 = temp_file("abs");
    const auto f2 = temp_file("delta");
    const auto out = temp_file("conv");
    write_file(f1, abs_table);
    write_file(f2, "x,value\n0,0\n");
    const auto r = run_command(cli_path() + " infconv --f1 " + quoted(f1.string()) +
                               " --f2 " + quoted(f2.string()) + " --out " +
                               quoted(out.string()));
    CHECK(r.exit_code == 0);
    CHECK(read_file(out) == abs_table);

    const auto bad = temp_file("bad");
    write_file(bad, "x,value\n1,zebra\n");
    const auto broken = run_command(cli_path() + " infconv --f1 " + quoted(bad.string()) +
                                    " --f2 " + quoted(f2.string()) + " --out " +
                                    quoted(out.string()));
    CHECK(broken.exit_code == 2);

    const auto missing = run_command(cli_path() + " infconv --f1 /nonexistent.csv --f2 " +
                                     quoted(f2.string()) + " --out " + quoted(out.string()));
    CHECK(missing.exit_code == 2);

    fs::remove(f1);
    fs::remove(f2);
    fs::remove(out);
    fs::remove(bad);
}

TEST_CASE("scalarize emits the example table") {
    const auto out = temp_file("scalarize");
    auto r = run_command(cli_path() + " scalarize --w 1,1 --out " + quoted(out.string()));
    CHECK(r.exit_code == 0);
    CHECK(read_file(out) == "x,value\n-1,+inf\n0,0\n1,-inf\n");

    r = run_command(cli_path() + " scalarize --w 0,1 --grid -2:2:1/2 --out " +
                    quoted(out.string()));
    CHECK(r.exit_code == 0);
    std::istringstream rows(read_file(out));
    std::string line;
    std::getline(rows, line);
    CHECK(line == "x,value");
    while (std::getline(rows, line)) {
        const auto comma = line.find(',');
        const std::string value = line.substr(comma + 1);
        CHECK((value == "0" || value == "+inf"));
    }

    CHECK(run_command(cli_path() + " scalarize --w 1,1 --grid 1:0:1 --out " +
                      quoted(out.string()))
              .exit_code == 2); // empty grid
    CHECK(run_command(cli_path() + " scalarize --w 1,1 --grid 1:2:1 --out " +
                      quoted(out.string()))
              .exit_code == 2); // grid missing 0
    fs::remove(out);
}
