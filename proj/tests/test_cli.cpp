#include "interlace/cli.hpp"
#include "interlace/examples.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace interlace;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "interlace");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(RunReport, RenderAndVerdict) {
    RunReport r("demo");
    r.add_text("header");
    EXPECT_TRUE(r.check("ok", [] { return std::pair{true, std::string("fine")}; }));
    EXPECT_FALSE(r.check("boom", []() -> std::pair<bool, std::string> { throw std::runtime_error("bad"); }));
    EXPECT_FALSE(r.all_pass());
    std::string text = r.render(false);
    EXPECT_TRUE(contains(text, "header\n"));
    EXPECT_TRUE(contains(text, "[PASS] ok: fine\n"));
    EXPECT_TRUE(contains(text, "[FAIL] boom: exception: bad"));
    EXPECT_TRUE(contains(text, "demo: 1 passed, 1 failed"));
    EXPECT_FALSE(contains(text, "s)"));
    EXPECT_TRUE(contains(r.render(true), "s)"));
}

TEST(RunReport, ParseIntList) {
    EXPECT_EQ(parse_int_list("3,2,1"), (std::vector<int>{3, 2, 1}));
    EXPECT_TRUE(parse_int_list("").empty());
    EXPECT_THROW(parse_int_list("3,x"), std::invalid_argument);
}

TEST(Cli, TauTraceMatchesGolden) {
    CliRun r = run({"tau-trace"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "U = {(7,3),(2,3),(1,4)}"));
    EXPECT_TRUE(contains(r.out, "output pattern I={2,4,6} J={3,5,7}"));
}

TEST(Cli, DeterministicOutput) {
    CliRun a = run({"verify-octahedron", "--random", "3x4", "--seed", "5"});
    CliRun b = run({"--seed", "5", "verify-octahedron", "--random", "3x4"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"no-such-command"}).code, 2);
    EXPECT_EQ(run({"verify-involution", "--bogus"}).code, 2);
    EXPECT_EQ(run({"verify-involution", "--grid", "2,5,2"}).code, 2);
    EXPECT_EQ(run({"schur", "--identity", "a", "--params", "lambda=2,1 t=x"}).code, 2);
}

TEST(Cli, InvolutionAndThreeTerm) {
    CliRun inv = run({"verify-involution", "--grid", "4,4,2", "--weights", "random"});
    EXPECT_EQ(inv.code, 0) << inv.out << inv.err;
    CliRun three = run({"verify-three-term", "--grid", "5,5,3"});
    EXPECT_EQ(three.code, 0) << three.out;
    EXPECT_TRUE(contains(three.out, "[PASS]"));
}

TEST(Cli, RskVerifyReportsBoundaryFailure) {
    CliRun r = run({"rsk", "--symbolic", "2x2", "--verify"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "x12*x21/(x12 + x21)"));
    EXPECT_TRUE(contains(r.out, "[FAIL]"));
    EXPECT_TRUE(contains(r.out, "3 passed, 1 failed"));
}

TEST(Cli, MatrixCommands) {
    CliRun pm = run({"path-matrix", "--grid", "4,4,2", "--check"});
    EXPECT_EQ(pm.code, 0) << pm.out;
    CliRun ms = run({"mstar", "--k", "2"});
    EXPECT_EQ(ms.code, 0) << ms.out;
    auto dir = std::filesystem::temp_directory_path() / "interlace_cli_test";
    std::filesystem::create_directories(dir);
    auto file = (dir / "id.txt").string();
    std::ofstream(file) << "1 0 0\n0 1 0\n0 0 1\n";
    CliRun cim = run({"check-interlacing-matrix", "--matrix", file, "--k", "2"});
    EXPECT_EQ(cim.code, 1) << cim.out;
}

TEST(Cli, SchurCommands) {
    CliRun id = run({"schur", "--identity", "kirillov", "--params", "c=2 r=2", "--nvars", "4"});
    EXPECT_EQ(id.code, 0) << id.out << id.err;
    CliRun pos = run({"schur", "--positivity", "rectangle", "--params", "c=2 r=2 t=1", "--nvars", "4"});
    EXPECT_EQ(pos.code, 0) << pos.out << pos.err;
    CliRun conj = run({"schur", "--conjecture", "3,2,0", "1,1,1"});
    EXPECT_EQ(conj.code, 0) << conj.out << conj.err;
    EXPECT_TRUE(contains(conj.out, "D = {1,2}"));
}

TEST(Cli, ReplayExamples) {
    CliRun r = run({"replay-examples"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "3 passed, 0 failed"));
}

TEST(Cli, ReplayDetectsDrift) {
    auto dir = std::filesystem::temp_directory_path() / "interlace_golden_drift";
    std::filesystem::create_directories(dir);
    for (const auto& [name, text] : replay_outputs()) std::ofstream(dir / name) << text;
    std::ofstream(dir / "rsk_2x2.txt") << "tampered\n";
    CliRun r = run({"replay-examples", "--golden-dir", dir.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "2 passed, 1 failed"));
}
