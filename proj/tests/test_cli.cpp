#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + SVT_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

} // namespace

TEST(CliCount, Examples) {
    EXPECT_EQ(run("count --family straight --n 4 --t 0 --c 0 --d 0 --e 2").out, "2\n");
    EXPECT_EQ(run("count --family skew --n 3 --t 1 --f 1").out, "6\n");
    EXPECT_EQ(run("count --family straight --n 3 --t 1 --m 3").out, "1\n");
    EXPECT_EQ(run("count --n 4 --t 0 --e 1").out, "3\n");
    EXPECT_EQ(run("count --n 4 --t 0").out, "5\n");
}

TEST(CliCount, Formats) {
    const CliResult j = run("count --family skew --n 3 --t 1 --f 1 --format json");
    EXPECT_EQ(j.code, 0);
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["count"], 6);
    EXPECT_EQ(doc["kind"], "cumulative");
    const CliResult c = run("count --n 4 --t 0 --format csv");
    EXPECT_EQ(c.out, "family,kind,n,f,t,c,d,e,m,count\nstraight,cumulative,4,,0,,,,,5\n");
}

TEST(CliCount, Oracle) {
    const CliResult r = run("count --family straight --n 5 --t 1 --c 1 --d 1 --e 1 --oracle");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(ends_with(r.out, "MATCH\n")) << r.out;
    const CliResult bad = run("count --family skew --n 6 --f 2 --t 1 --c 1 --d 0 --e 3 --oracle");
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(bad.out, "formula: 34\noracle: 35\nMISMATCH\n");
}

TEST(CliCount, ContractViolations) {
    EXPECT_EQ(run("count --family straight --n 4 --t 0 --c 1 --d 0 --e 2").code, 1);
    EXPECT_EQ(run("count --family skew --n 3 --t 1").code, 1);
    EXPECT_EQ(run("count --family straight --n 3 --t 1 --c 1").code, 1);
    EXPECT_EQ(run("count --n 1 --t 0 --m 1").code, 1);
    EXPECT_EQ(run("count --n 0 --t 0").code, 1);
    EXPECT_EQ(run("count --family round --n 3 --t 0").code, 1);
    EXPECT_EQ(run("count --t 0").code, 1);
    EXPECT_EQ(run("bogus").code, 1);
}

TEST(CliExpected, Examples) {
    EXPECT_EQ(run("expected --n 4 --t 0").out, "7/5\n");
    EXPECT_EQ(run("expected --n 3 --t 1").out, "2/3\n");
    EXPECT_EQ(run("expected --n 5 --t 5").out, "0/1\n");
    EXPECT_EQ(run("expected --n 2 --t 3").code, 1);
    EXPECT_EQ(run("expected --n 1 --t 0").code, 1);
}

TEST(CliSeries, Examples) {
    EXPECT_EQ(run("series --family straight --t 0 --order 2").out, "0: 1\n1: 0\n2: alpha\n");
    EXPECT_TRUE(ends_with(run("series --family straight --t 1 --order 1").out, "1: 1\n"));
    const CliResult s = run("series --family skew --f 1 --t 1 --order 3 --x 1 --y 1 --alpha 1");
    EXPECT_EQ(s.code, 0);
    EXPECT_TRUE(ends_with(s.out, "3: 6\n")) << s.out;
    EXPECT_TRUE(ends_with(run("series --t 0 --order 4 --x 1/2 --y 1 --alpha 1").out, "4: 15/4\n"));
}

TEST(CliSeries, Limits) {
    EXPECT_EQ(run("series --t 0 --order 25").code, 1);
    EXPECT_EQ(run("series --t 0 --order 25", "SVT_MAX_ORDER=30").code, 0);
    EXPECT_EQ(run("series --t 0 --order 6", "SVT_MAX_ORDER=5").code, 1);
    EXPECT_EQ(run("series --t 0 --order 6 --max-order 6", "SVT_MAX_ORDER=5").code, 0);
    EXPECT_EQ(run("series --t 0 --order 3 --x 1").code, 1);
    EXPECT_EQ(run("series --t 0 --order 3 --x a --y 1 --alpha 1").code, 1);
}

TEST(CliVerify, ExitCodesAndReport) {
    const CliResult empty = run("verify --max-n 0");
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.out.find("agree                    0"), std::string::npos);

    // The skew counts with 0 < t < f already differ at n = 1.
    const CliResult tiny = run("verify --max-n 1");
    EXPECT_EQ(tiny.code, 2);
    EXPECT_NE(tiny.out.find("thm6 n=1 f=2 t=1 c=0 d=0 e=1 tableau=1 path=1 series=1 formula=0"), std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "svt_cli_report.json";
    const CliResult r = run("verify --max-n 6 --threads 2 --report " + path.string());
    EXPECT_EQ(r.code, 2);
    std::ifstream in(path);
    ASSERT_TRUE(in);
    const auto doc = nlohmann::json::parse(in);
    EXPECT_GT(doc["summary"]["agree"].get<int>(), 0);
    EXPECT_GT(doc["summary"]["disagree"].get<int>(), 0);
    EXPECT_EQ(doc["summary"]["builder-error"], 0);
    for (const auto& rep : doc["reports"]) {
        if (rep["status"] == "disagree") {
            EXPECT_GT(rep["params"]["f"].get<int>(), rep["params"]["t"].get<int>());
            EXPECT_GT(rep["params"]["t"].get<int>(), 0);
        }
    }
    std::filesystem::remove(path);

    EXPECT_EQ(run("verify --max-n 1 --report /nonexistent-dir/x.json").code, 3);
}

TEST(CliTable, Examples) {
    EXPECT_EQ(run("table --which cor4 --t 0 --n 2..8").out,
              "n,t,count\n2,0,1\n3,0,2\n4,0,5\n5,0,14\n6,0,42\n7,0,132\n8,0,429\n");
    const std::string thm7 = run("table --which thm7 --f 1 --t 1 --n 2..6").out;
    EXPECT_EQ(thm7, "n,f,t,count\n2,1,1,2\n3,1,1,6\n4,1,1,19\n5,1,1,62\n6,1,1,207\n");
    EXPECT_EQ(run("table --which expected --t 0 --n 4").out, "n,t,expected\n4,0,7/5\n");
    EXPECT_EQ(run("table --which cor4 --t 0 --n 5..4").out, "n,t,count\n");
    EXPECT_EQ(run("table --which cor4 --t 0 --n 1..x").code, 1);
}

TEST(Cli, Deterministic) {
    const std::string a = run("series --family skew --f 2 --t 1 --order 6").out;
    EXPECT_EQ(a, run("series --family skew --f 2 --t 1 --order 6").out);
    EXPECT_FALSE(a.empty());
}
