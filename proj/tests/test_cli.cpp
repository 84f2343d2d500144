#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ncstrip::cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// stdout of the real binary and its exit status
Run run_binary(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" NCSTRIP_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, "", ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST(Cli, ExpandText) {
    const auto r = run({"expand", "--shape", "3,2/1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2h(2,1) + 2h(2) + h(1,1) + 2h(1) + h()\n");
    EXPECT_NE(r.err.find("finished in"), std::string::npos);
}

TEST(Cli, ExpandJson) {
    const auto r = run({"expand", "--shape", "3,2/1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "expand");
    EXPECT_EQ(j["objects"], 8);
    ASSERT_EQ(j["result"].size(), 5u);
    EXPECT_EQ(j["result"][4]["lambda"], nlohmann::json::array({2, 1}));
    EXPECT_EQ(j["result"][4]["coeff"], "2");
}

TEST(Cli, ExpandFamilyMethodsAgree) {
    const auto a = run({"expand", "--family", "fuss-a", "-n", "3", "-k", "2", "--method", "enumerate"});
    const auto b = run({"expand", "--family", "fuss-a", "-n", "3", "-k", "2", "--method", "formula"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = run({"expand", "--family", "fuss-b", "-n", "2", "-k", "1"});
    EXPECT_EQ(c.out, "2h(2) + h(1,1) + 2h(1) + h()\n");
}

TEST(Cli, CountTables) {
    const auto r = run({"count", "--family", "ncb-k", "-n", "3", "-k", "1", "--by", "type"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(2,1)    6"), std::string::npos) << r.out;
    EXPECT_EQ(run({"count", "--family", "pf", "-n", "3"}).out, "16\n");
    EXPECT_EQ(run({"count", "--family", "nca-k", "-n", "3", "-k", "1", "--by", "reduced-type", "--lambda", "1"}).out,
              "2\n");
    const auto checked = run({"count", "--family", "nca-k", "-n", "3", "-k", "2", "--check"});
    EXPECT_EQ(checked.code, 0);
}

TEST(Cli, BijectRoundTrip) {
    const auto fwd = run({"biject", "--map", "psi-a", "-n", "6", "-k", "2", "--input", "ENEENNNNENNNEENNNN"});
    ASSERT_EQ(fwd.code, 0);
    EXPECT_EQ(fwd.out.substr(0, fwd.out.find('\n')), "1,6/2,3,4,5/7,10,11,12/8,9");
    const auto inv = run({"biject", "--map", "psi-a", "--inverse", "-n", "6", "-k", "2", "--input",
                          "1,6/2,3,4,5/7,10,11,12/8,9"});
    EXPECT_EQ(inv.out.substr(0, inv.out.find('\n')), "ENEENNNNENNNEENNNN");
    const auto b = run({"biject", "--map", "psi-b", "--inverse", "-n", "1", "-k", "1", "--input", "-1/1"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out.substr(0, b.out.find('\n')), "NE");
}

TEST(Cli, VerifyReportsChecks) {
    const auto r = run({"verify", "--theorem", "1.2", "--n-max", "2", "--k-max", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pass  fuss-b n=2 k=1  6 partitions checked"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("verified:"), std::string::npos);
    EXPECT_EQ(run({"verify", "--theorem", "bijections", "--n-max", "2", "--k-max", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "--theorem", "2.1", "--n-max", "4"}).code, 0);
}

TEST(Cli, Enumerate) {
    const auto r = run({"enumerate", "--object", "fuss-catalan", "-n", "2", "-k", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "path    type   reduced type\n"
                     "EENNNN  (2)    ()\n"
                     "ENENNN  (1,1)  (1)\n"
                     "ENNENN  (1,1)  (1)\n");
    const auto s = run({"enumerate", "--object", "rstrips", "--shape", "3,2/1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(s.out)["objects"], 8);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"expand", "--shape", "1,2/"}).code, 2);
    EXPECT_EQ(run({"expand"}).code, 2);
    EXPECT_EQ(run({"biject", "--map", "psi-a", "-n", "2", "-k", "1", "--input", "NNEE"}).code, 2);
    EXPECT_EQ(run({"verify", "--theorem", "1.1", "--n-max", "12", "--k-max", "2"}).code, 3);
}

TEST(CliBinary, ExitCodesAndOutput) {
    const auto ok = run_binary("expand --shape 3,2/1");
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "2h(2,1) + 2h(2) + h(1,1) + 2h(1) + h()\n");
    EXPECT_EQ(run_binary("nonsense").code, 2);
    EXPECT_EQ(run_binary("enumerate --object rstrips --shape 3,2/1", "NCSTRIP_MAX_OBJECTS=3").code, 3);
    EXPECT_EQ(run_binary("enumerate --object rstrips --shape 3,2/1", "NCSTRIP_MAX_OBJECTS=8").code, 0);
}

TEST(CliBinary, Deterministic) {
    const std::string args = "enumerate --object nca-k -n 3 -k 2 --format json";
    const auto a = run_binary(args);
    const auto b = run_binary(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
}
