#include "support.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

struct Run
{
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(GRIDLOCK_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p))
        r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string grid(const std::string& name) { return support::source_path("data/grids/" + name + ".json"); }
std::string script(const std::string& name) { return support::source_path("data/scripts/" + name + ".txt"); }

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::filesystem::path scratch(const std::string& file)
{
    const auto dir = std::filesystem::temp_directory_path() / "gridlock-cli-test";
    std::filesystem::create_directories(dir);
    return dir / file;
}

} // namespace

TEST(Cli, Validate)
{
    const auto ok = run("validate " + grid("trefoil-right"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(has(ok.out, "tb = 1, r = 0")) << ok.out;

    const auto two = run("validate " + grid("two-component"));
    EXPECT_EQ(two.code, 0);
    EXPECT_TRUE(has(two.out, "2 components")) << two.out;

    const auto shared = run("validate " + grid("shared-cell"));
    EXPECT_EQ(shared.code, 1);
    EXPECT_TRUE(has(shared.out, "SharedCell")) << shared.out;
    EXPECT_TRUE(has(shared.out, "row 3")) << shared.out;

    EXPECT_EQ(run("validate /nonexistent.json").code, 2);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, HomologyTables)
{
    const auto u = run("homology " + grid("unknot"));
    EXPECT_EQ(u.code, 0);
    EXPECT_TRUE(has(u.out, "total hat rank 1")) << u.out;

    const auto t = run("homology " + grid("trefoil-right"));
    EXPECT_EQ(t.code, 0);
    EXPECT_TRUE(has(t.out, "       2          1     1")) << t.out;
    EXPECT_TRUE(has(t.out, "       0         -1     1")) << t.out;
    EXPECT_TRUE(has(t.out, "tilde rank 48")) << t.out;
}

TEST(Cli, HomologyWindow)
{
    const auto top = run("homology " + grid("trefoil-right") + " --window 0:1");
    EXPECT_EQ(top.code, 0) << top.out;
    EXPECT_TRUE(has(top.out, "       2          1     1")) << top.out;

    const auto narrow = run("homology " + grid("trefoil-right") + " --window 0:0");
    EXPECT_EQ(narrow.code, 3) << narrow.out;
    EXPECT_TRUE(has(narrow.out, "tilde homology in window")) << narrow.out;

    EXPECT_EQ(run("homology " + grid("trefoil-right") + " --window x").code, 1);
}

TEST(Cli, Budget)
{
    const auto r = run("homology " + grid("figure-eight") + " --budget 10");
    EXPECT_EQ(r.code, 3) << r.out;
    const auto inv = run("invariants " + grid("figure-eight") + " --budget 2");
    EXPECT_EQ(inv.code, 3) << inv.out;
    EXPECT_TRUE(has(inv.out, "unknown")) << inv.out;
}

TEST(Cli, Invariants)
{
    const auto r = run("invariants " + grid("trefoil-right"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "x+ at (M, A) = (2, 1): nonvanishing, d1 nonvanishing")) << r.out;
    EXPECT_TRUE(has(r.out, "x- at")) << r.out;
    const auto minus = run("invariants " + grid("trefoil-left") + " --which minus --kmax 1");
    EXPECT_EQ(minus.code, 0);
    EXPECT_FALSE(has(minus.out, "x+")) << minus.out;
    EXPECT_TRUE(has(minus.out, "vanishes")) << minus.out;
    EXPECT_FALSE(has(minus.out, "d2")) << minus.out;
    EXPECT_EQ(run("invariants " + grid("two-component")).code, 1);
    EXPECT_EQ(run("invariants " + grid("unknot") + " --which sideways").code, 1);
}

TEST(Cli, Obstruct)
{
    const auto classical = run("obstruct " + grid("unknot-stab-ne") + " " + grid("unknot"));
    EXPECT_EQ(classical.code, 0);
    EXPECT_TRUE(has(classical.out, "ClassicallyObstructed")) << classical.out;

    const auto none = run("obstruct " + grid("unknot") + " " + grid("unknot"));
    EXPECT_EQ(none.code, 0);
    EXPECT_TRUE(has(none.out, "NoObstructionFound")) << none.out;
    EXPECT_TRUE(has(none.out, "not a claim")) << none.out;

    const auto unknown = run("obstruct " + grid("figure-eight") + " " + grid("figure-eight") + " --budget 2");
    EXPECT_EQ(unknown.code, 3) << unknown.out;
    EXPECT_TRUE(has(unknown.out, "IncomparableUnknowns")) << unknown.out;

    EXPECT_EQ(run("obstruct " + grid("unknot") + " " + grid("unknot") + " --which both").code, 1);
}

TEST(Cli, ScriptCheck)
{
    const auto demo = run("script-check " + script("concordance-demo"));
    EXPECT_EQ(demo.code, 0);
    EXPECT_TRUE(has(demo.out, "PASS")) << demo.out;

    const auto bad = run("script-check " + script("bad-tb"));
    EXPECT_EQ(bad.code, 0);
    EXPECT_TRUE(has(bad.out, "FAIL")) << bad.out;

    const auto disk = run("script-check " + script("disk"));
    EXPECT_EQ(disk.code, 0);
    EXPECT_TRUE(has(disk.out, "not a concordance")) << disk.out;

    const auto path = scratch("typo.txt");
    std::ofstream(path) << "start K tb=-1 r=0\nBirht -> U tb=-1 r=0\nend K tb=-1 r=0\n";
    const auto typo = run("script-check " + path.string());
    EXPECT_EQ(typo.code, 1);
    EXPECT_TRUE(has(typo.out, "UnknownMove")) << typo.out;
    EXPECT_TRUE(has(typo.out, "2:1")) << typo.out;
}

TEST(Cli, Catalog)
{
    const auto list = run("catalog list");
    EXPECT_EQ(list.code, 0);
    EXPECT_TRUE(has(list.out, "trefoil-right")) << list.out;
    EXPECT_TRUE(has(list.out, "P(-4,-3,3)-L1")) << list.out;

    const auto show = run("catalog show 'P(-4,-3,3)-L2'");
    EXPECT_EQ(show.code, 0);
    EXPECT_TRUE(has(show.out, "[published]")) << show.out;
    EXPECT_TRUE(has(show.out, "no grid") || has(show.out, "none")) << show.out;

    const auto derived = run("catalog show trefoil-left");
    EXPECT_TRUE(has(derived.out, "[derived]")) << derived.out;

    EXPECT_EQ(run("catalog show nothing-here").code, 1);
    EXPECT_EQ(run("catalog remove x").code, 1);
}

TEST(Cli, CatalogEnvironmentOverride)
{
    const auto path = scratch("cat.json");
    std::ofstream(path) << R"({"entries": [{"name": "lonely", "grid": {"n": 2, "x": [2, 1], "o": [1, 2]}}]})";
    const auto r = run("catalog list");
    const auto o = [&] {
        const std::string cmd = "GRIDLOCK_CATALOG=" + path.string() + " " + std::string(GRIDLOCK_CLI) + " catalog list";
        FILE* p = popen(cmd.c_str(), "r");
        std::string out;
        char buf[1024];
        while (std::size_t n = fread(buf, 1, sizeof buf, p))
            out.append(buf, n);
        pclose(p);
        return out;
    }();
    EXPECT_TRUE(has(o, "lonely")) << o;
    EXPECT_FALSE(has(o, "trefoil")) << o;
    EXPECT_FALSE(has(r.out, "lonely"));
}

TEST(Cli, JsonOutput)
{
    const auto a = scratch("a.json"), b = scratch("b.json"), c = scratch("c.json");
    ASSERT_EQ(run("invariants " + grid("trefoil-right") + " --reproducible --threads 1 --out " + a.string()).code, 0);
    ASSERT_EQ(run("invariants " + grid("trefoil-right") + " --reproducible --threads 3 --out " + b.string()).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    const auto j = gridlock::json::parse(slurp(a));
    EXPECT_FALSE(j.contains("generated_at"));
    EXPECT_EQ(j["classes"][0]["provenance"]["grid"], "trefoil-right");

    ASSERT_EQ(run("homology " + grid("trefoil-right") + " --out " + c.string()).code, 0);
    const auto h = gridlock::json::parse(slurp(c));
    EXPECT_TRUE(h.contains("generated_at"));

    const auto stdout_only = run("homology " + grid("unknot"));
    EXPECT_FALSE(has(stdout_only.out, "{")) << stdout_only.out;

    EXPECT_EQ(run("homology " + grid("unknot") + " --out /nonexistent/dir/x.json").code, 2);
}
