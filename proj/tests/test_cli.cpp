#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string &args) {
    const std::string cmd = std::string(SYMTANGLE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, GenerateIsDeterministic) {
    const CliRun a = run("generate --n 4 --symmetric --format json");
    const CliRun b = run("generate --n 4 --symmetric --format json");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j.size(), 16u);
}

TEST(Cli, GenerateSingleTableau) {
    const CliRun r = run("generate --n 3 --tableau 2 --format tsv");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("D1+"), std::string::npos);
    EXPECT_EQ(r.out.find("Q1+"), std::string::npos);
}

TEST(Cli, AnalyzeByNameAndFile) {
    const CliRun byname = run("analyze --name W3+ --format json");
    ASSERT_EQ(byname.code, 0);
    const auto j = nlohmann::json::parse(byname.out);
    EXPECT_EQ(j["n"], 3);

    const auto path = temp_file("symtangle_cli_ghz.json",
                                R"({"n": 3, "terms": [{"ket": "000", "re": 1}, {"ket": "111", "re": 1}]})");
    const CliRun byfile = run("analyze --state " + path.string() + " --format json");
    ASSERT_EQ(byfile.code, 0);
    EXPECT_EQ(nlohmann::json::parse(byfile.out)["classification"]["label"], "bound-entangled");
    std::filesystem::remove(path);
}

TEST(Cli, WritesOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "symtangle_cli_out.tsv";
    std::filesystem::remove(path);
    ASSERT_EQ(run("generate --n 2 --format tsv --out " + path.string()).code, 0);
    EXPECT_TRUE(std::filesystem::exists(path));
    EXPECT_GT(std::filesystem::file_size(path), 0u);
    std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("verify").code, 0);
    EXPECT_EQ(run("verify --tables II,V --format json").code, 0);
    EXPECT_EQ(run("verify --inject-fault II/W3+/a/tr_rhoI2").code, 1);
    EXPECT_EQ(run("verify --strict").code, 1);
    EXPECT_EQ(run("verify --inject-fault II/none/x").code, 2);
    EXPECT_EQ(run("generate --n 7").code, 2);
    EXPECT_EQ(run("analyze --name nope").code, 2);
    EXPECT_EQ(run("analyze --state /nonexistent.json").code, 2);
    EXPECT_EQ(run("--bogus").code, 2);

    const auto zero = temp_file("symtangle_cli_zero.json", R"({"n": 2, "terms": [{"ket": "00", "re": 0}]})");
    EXPECT_EQ(run("analyze --state " + zero.string()).code, 2);
    std::filesystem::remove(zero);
}

TEST(Cli, QubitLimitFromEnvironment) {
    EXPECT_EQ(run("generate --n 3").code, 0);
    const std::string cmd = "SYMTANGLE_MAX_N=2 " + std::string(SYMTANGLE_CLI_PATH) + " generate --n 3 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
}
