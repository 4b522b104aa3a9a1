#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "psc/cli.hpp"
#include "psc/code_file.hpp"

using namespace psc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("psc_test_" + name)).string();
}

}  // namespace

TEST_CASE("bound prints the diagram and the bound") {
    const auto r = run({"bound", "--v", "0110100", "--delta", "2", "--ascii"});
    CHECK(r.code == exit_pass);
    CHECK(r.out.find("0 1 0 . 0 . .") != std::string::npos);
    CHECK(r.out.find("pivot columns 2 3 5") != std::string::npos);
    CHECK(r.out.find("dimension bound (delta=2): min(5, 5) = 5") != std::string::npos);
}

TEST_CASE("construct, verify, stats and puncture through files") {
    const auto code71 = temp_path("code71.txt");
    auto r = run({"construct", "--q", "2", "--n", "6", "--k", "3", "--d", "4", "--out", code71});
    CHECK(r.code == exit_pass);
    CHECK(r.out.find("size 71") != std::string::npos);
    CHECK(r.out.find("bound attained on all 4 fibers") != std::string::npos);

    r = run({"verify", "--in", code71, "--expect-distance", "4", "--exhaustive"});
    CHECK(r.code == exit_pass);
    CHECK(r.out.find("minimum distance 4") != std::string::npos);
    CHECK(r.out.find("0 violations") != std::string::npos);

    CHECK(run({"verify", "--in", code71, "--expect-distance", "5"}).code == exit_verification_failed);
    CHECK(run({"verify", "--in", code71, "--sample", "500"}).code == exit_pass);

    r = run({"stats", "--in", code71});
    CHECK(r.code == exit_pass);
    CHECK(r.out.find("111000: 64") != std::string::npos);

    const auto punctured = temp_path("punct71.txt");
    r = run({"puncture", "--in", code71, "--drop-coordinate", "6", "--v", "000001", "--out", punctured});
    CHECK(r.code == exit_pass);
    r = run({"verify", "--in", punctured});
    CHECK(r.code == exit_pass);
    CHECK(r.out.find("expected >= 3") != std::string::npos);

    std::remove(code71.c_str());
    std::remove(punctured.c_str());
}

TEST_CASE("construct is byte-deterministic") {
    const auto a = temp_path("det_a.txt"), b = temp_path("det_b.txt");
    for (const auto& p : {a, b}) run({"construct", "--n", "7", "--k", "3", "--d", "4", "--out", p});
    CHECK(read_file(a) == read_file(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("skeleton subcommand") {
    const auto r = run({"skeleton", "--n", "6", "--k", "3", "--d", "4"});
    CHECK(r.code == exit_pass);
    CHECK(r.out == "111000\n100110\n010101\n001011\nskeleton size 4\n");
}

TEST_CASE("usage errors exit with 2 and a one-line diagnostic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"construct", "--n", "6", "--k", "3", "--d", "3"},
             {"construct", "--n", "6", "--k", "3"},
             {"bound", "--v", "0000"},
             {"verify", "--in", "/nonexistent/code.txt"},
             {"puncture", "--in", "/nonexistent", "--drop-coordinate", "1", "--v", "1"},
             {"frobnicate"},
         }) {
        const auto r = run(args);
        CHECK(r.code == exit_usage);
        CHECK_FALSE(r.err.empty());
        CHECK(r.err.find('\n') == r.err.size() - 1);
    }
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == exit_pass);
    CHECK(r.out.find("construct") != std::string::npos);
}
