#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "pdstile/io/json_io.hpp"

using namespace pdstile;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

// stdout only; stderr is folded in when `merge` is set.
Outcome run(const std::string& args, bool merge = false) {
    const std::string cmd = std::string(PDSTILE_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    Outcome r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "pdstile_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, ExitCodes) {
    const std::vector<std::pair<std::string, int>> cases = {
        {"analyze fibonacci", 0},
        {"bpa rauzy --pair 12,21", 0},
        {"bpa thue-morse --pair ab,ba", 1},
        {"--cap-bpa 2 bpa rauzy --pair 12,21", 3},
        {"theorem-uvvu fibonacci --u a --v b", 0},
        {"theorem-uvvu fibonacci --u ab --v ba", 3},
        {"ar --word 123 --d 3", 0},
        {"rauzy-family --c 312", 0},
        {"apcomplex period-doubling --K 1", 1},
        {"apcomplex fibonacci --K 1", 0},
        {"overlap2d table", 1},
        {"overlap2d octagonal --v 1,0", 3},
        {"--cap-overlap 5 overlap2d table", 3},
        {"bpa fibonacci --pair a,b", 2},
        {"bpa /nonexistent/in.json --pair a,b", 2},
        {"analyze no-such-builtin", 2},
        {"bpa fibonacci", 2},
        {"frobnicate", 2},
        {"overlap2d octagonal --v 1,x", 2},
    };
    for (const auto& [args, code] : cases) EXPECT_EQ(run(args).code, code) << args;
}

TEST(Cli, StructuredOutputIsDeterministicJson) {
    for (const std::string args : {"analyze rauzy", "bpa rauzy --pair 12,21 --dual-quotient", "overlap2d table",
                                   "apcomplex period-doubling --K 1"}) {
        Outcome a = run("--format structured " + args), b = run("--format structured " + args);
        EXPECT_EQ(a.out, b.out) << args;
        Json j = parse_json_text(a.out, args);
        EXPECT_EQ(j.at("schema_version"), 1);
        EXPECT_EQ(j.at("exit_code"), a.code);
        EXPECT_FALSE(j.contains("timings"));
    }
    Json t = parse_json_text(run("--format structured --timings analyze fibonacci").out, "timings");
    EXPECT_TRUE(t.contains("timings"));
}

TEST(Cli, StructuredReportsCarryVerdicts) {
    Json j = parse_json_text(run("--format structured overlap2d table").out, "table");
    EXPECT_EQ(j.at("report").at("verdict"), "RefutesPds");
    Json k = parse_json_text(run("--format structured bpa thue-morse --pair ab,ba").out, "tm");
    EXPECT_EQ(k.at("report").at("verdict"), "FiniteNoCoincidence");
}

TEST(Cli, ReadsJsonInputs) {
    auto sub = scratch("fib.json");
    write(sub, R"({"alphabet": ["a", "b"], "rules": {"a": "ab", "b": "a"}})");
    Outcome r = run("bpa " + sub.string() + " --pair ab,ba");
    EXPECT_EQ(r.code, 0) << r.out;
    auto bad = scratch("bad.json");
    write(bad, R"({"alphabet": ["a", "b"], )");
    Outcome e = run("analyze " + bad.string(), true);
    EXPECT_EQ(e.code, 2);
    EXPECT_NE(e.out.find("byte"), std::string::npos) << e.out;
}

TEST(Cli, SvgSeries) {
    auto dir = scratch("svg");
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    EXPECT_EQ(run("overlap2d table --svg " + dir.string()).code, 1);
    for (const char* f : {"stage_0.svg", "stage_1.svg", "overlaps.svg"}) EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
    EXPECT_EQ(read_text_file((dir / "stage_1.svg").string()), read_text_file(std::string(PDSTILE_TEST_DIR) + "/golden/table_stage1.svg"));
    auto blocker = scratch("blocker");
    write(blocker, "a file, not a directory");
    EXPECT_EQ(run("overlap2d table --svg " + (blocker / "out").string()).code, 2);
}
