#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "submaj/graph.hpp"
#include "submaj/io.hpp"
#include "submaj/matrix.hpp"

#ifndef SUBMAJ_CLI_PATH
#error "SUBMAJ_CLI_PATH must point at the command-line binary"
#endif

namespace fs = std::filesystem;
using submaj::Matrix;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "submaj-cli-tests";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out = scratch_dir() / "stdout.txt";
    const std::string cmd =
        std::string(SUBMAJ_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult res;
#ifdef _WIN32
    res.exit_code = status;
#else
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    res.output = text.str();
    return res;
}

fs::path write_matrix_fixture(const std::string& name, const Matrix& m) {
    const fs::path p = scratch_dir() / name;
    submaj::io::write_matrix_file(p.string(), m);
    return p;
}

fs::path write_text_fixture(const std::string& name, const std::string& text) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

}  // namespace

TEST_CASE("angles: identical and perpendicular subspaces") {
    const auto x = write_matrix_fixture("x.txt", Matrix{{1.0}, {0.0}});
    const auto y = write_matrix_fixture("y.txt", Matrix{{0.0}, {1.0}});

    const auto same = run_cli("angles " + x.string() + " " + x.string());
    CHECK(same.exit_code == 0);
    CHECK(same.output.find("cross-check: ok") != std::string::npos);

    const auto perp = run_cli("--json angles " + x.string() + " " + y.string());
    CHECK(perp.exit_code == 0);
    CHECK(perp.output.find("\"schema\":1") != std::string::npos);
    CHECK(perp.output.find("1.5707963267948966") != std::string::npos);
}

TEST_CASE("ritz: holding bound exits 0, asymmetric operator exits 2") {
    const auto a = write_matrix_fixture("a.txt", Matrix::diag({1.0, 2.0, 3.0}));
    const auto x = write_matrix_fixture("rx.txt", Matrix{{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}});
    const double r = 1.0 / std::sqrt(2.0);
    const auto y = write_matrix_fixture("ry.txt", Matrix{{1.0, 0.0}, {0.0, r}, {0.0, r}});

    const auto ok = run_cli("ritz " + a.string() + " " + x.string() + " " + y.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("holds") != std::string::npos);

    const auto bad = write_matrix_fixture("asym.txt", Matrix{{0.0, 1.0}, {0.0, 0.0}});
    const auto x2 = write_matrix_fixture("rx2.txt", Matrix{{1.0}, {0.0}});
    const auto asym = run_cli("ritz " + bad.string() + " " + x2.string() + " " + x2.string());
    CHECK(asym.exit_code == 2);
}

TEST_CASE("graph-compare: fixture verdict and byte-stable json") {
    const auto path4 = write_text_fixture("path4.txt", "4 3\n1 2\n2 3\n3 4\n");
    const auto star4 = write_text_fixture("star4.txt", "4 3\n1 2\n1 3\n1 4\n");

    const auto human = run_cli("graph-compare " + path4.string() + " " + star4.string());
    CHECK(human.exit_code == 0);
    CHECK(human.output.find("l=2") != std::string::npos);
    CHECK(human.output.find("holds") != std::string::npos);

    const auto j1 = run_cli("--json graph-compare " + path4.string() + " " + star4.string());
    const auto j2 = run_cli("--json graph-compare " + path4.string() + " " + star4.string());
    CHECK(j1.exit_code == 0);
    CHECK(j1.output == j2.output);
    CHECK(j1.output.find("\"differing_edges\":2") != std::string::npos);
    CHECK(j1.output.find("\"bound\":8") != std::string::npos);

    const auto mismatched = write_text_fixture("one-edge.txt", "4 1\n1 2\n");
    const auto bad = run_cli("graph-compare " + path4.string() + " " + mismatched.string());
    CHECK(bad.exit_code == 2);

    const auto malformed = write_text_fixture("short.txt", "4 3\n1 2\n");
    CHECK(run_cli("graph-compare " + path4.string() + " " + malformed.string()).exit_code == 2);
}

TEST_CASE("dilate: round-trips the projector through --out") {
    const auto a = write_matrix_fixture("half.txt", Matrix{{0.5}});
    const fs::path out = scratch_dir() / "proj.txt";

    const auto first = run_cli("dilate " + a.string() + " --out " + out.string());
    CHECK(first.exit_code == 0);
    const Matrix p = submaj::io::read_matrix_file(out.string());
    REQUIRE(p.rows() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(p(i, j) == doctest::Approx(0.5));

    // Feeding the written file back must reproduce it byte for byte.
    std::ifstream in1(out);
    std::ostringstream bytes1;
    bytes1 << in1.rdbuf();
    const fs::path out2 = scratch_dir() / "proj2.txt";
    const auto copy = write_matrix_fixture("copy.txt", p);
    submaj::io::write_matrix_file(out2.string(), submaj::io::read_matrix_file(copy.string()));
    std::ifstream in2(out2);
    std::ostringstream bytes2;
    bytes2 << in2.rdbuf();
    CHECK(bytes1.str() == bytes2.str());

    // Out-of-range spectrum without --normalize is an input error; with
    // --normalize it succeeds.
    const auto wide = write_matrix_fixture("wide.txt", Matrix::diag({-1.0, 5.0}));
    CHECK(run_cli("dilate " + wide.string()).exit_code == 2);
    const auto trial = write_matrix_fixture("trial.txt", Matrix{{1.0}, {0.0}});
    const auto normalized =
        run_cli("--json dilate " + wide.string() + " --normalize --trial " + trial.string());
    CHECK(normalized.exit_code == 0);
    CHECK(normalized.output.find("\"ritz_preservation_err\":") != std::string::npos);
}

TEST_CASE("verify: deterministic per seed and strict about unknown ids") {
    const std::string args =
        "--json verify --theorems THM-4-1-RITZ THM-5-2-GRAPH --trials 15 --seed 99 --n-max 7";
    const auto r1 = run_cli(args);
    const auto r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    CHECK(r1.output.find("\"theorem\":\"THM-4-1-RITZ\"") != std::string::npos);
    CHECK(r1.output.find("\"failures\":0") != std::string::npos);

    CHECK(run_cli("verify --theorems NOT-A-THEOREM --trials 1").exit_code == 2);
}

TEST_CASE("missing input files and bad invocations exit 2") {
    CHECK(run_cli("angles /nonexistent/a /nonexistent/b").exit_code == 2);
    const auto empty = write_text_fixture("empty.txt", "");
    CHECK(run_cli("angles " + empty.string() + " " + empty.string()).exit_code == 2);
    CHECK(run_cli("no-such-subcommand").exit_code != 0);
}
