#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fdo/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "fdo_bench");
    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = fdo::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("fdo_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("run writes a TF1 summary row")
{
    const fs::path dir = scratch("run");
    const Invocation r = invoke({"run", "--problem", "tf1", "--algo", "fdo", "--runs", "30", "--seed", "7", "--iters", "50", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto rows = lines(slurp(dir / "summary.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "problem,algorithm,runs,mean,std");
    CHECK(rows[1].rfind("tf1,fdo,30,", 0) == 0);
    CHECK(lines(slurp(dir / "series.csv")).size() == 1 + 30 * 50);
}

TEST_CASE("run with wf 1 is labelled accordingly")
{
    const fs::path dir = scratch("wf");
    const Invocation r = invoke({"run", "--problem", "tf2", "--wf", "1", "--runs", "2", "--iters", "20", "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(lines(slurp(dir / "summary.csv"))[1].rfind("tf2,fdo-wf1,2,", 0) == 0);
}

TEST_CASE("compare writes a p-value column")
{
    const fs::path dir = scratch("compare");
    const Invocation r = invoke({"compare", "--problem", "tf14", "--a", "fdo", "--b", "pso", "--runs", "5", "--iters", "30", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto rows = lines(slurp(dir / "compare.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "problem,algo_a,algo_b,mean_a,std_a,mean_b,std_b,p_value");
    CHECK(rows[1].rfind("tf14,fdo,pso,", 0) == 0);
}

TEST_CASE("identical invocations produce byte-identical files")
{
    for (const std::string sub : {"run", "metrics", "compare"}) {
        CAPTURE(sub);
        const fs::path a = scratch(sub + "_a");
        const fs::path b = scratch(sub + "_b");
        const std::vector<std::string> common{sub, "--problem", "tf10", "--runs", "4", "--iters", "25", "--seed", "11"};
        auto with_out = [&](const fs::path& dir) {
            auto args = common;
            args.insert(args.end(), {"--out", dir.string()});
            return args;
        };
        REQUIRE(invoke(with_out(a)).code == 0);
        REQUIRE(invoke(with_out(b)).code == 0);
        std::size_t compared = 0;
        for (const auto& entry : fs::directory_iterator(a)) {
            CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
            ++compared;
        }
        CHECK(compared >= 2);
    }
}

TEST_CASE("metrics defaults follow the search-history protocol")
{
    const fs::path dir = scratch("metrics");
    REQUIRE(invoke({"metrics", "--out", dir.string()}).code == 0);
    CHECK(lines(slurp(dir / "positions.csv")).size() == 1 + 150 * 10);
    CHECK(lines(slurp(dir / "series.csv")).size() == 1 + 150);
}

TEST_CASE("list prints every problem")
{
    const Invocation r = invoke({"list"});
    REQUIRE(r.code == 0);
    for (const char* name : {"tf1", "tf19", "cec04", "cec10", "antenna", "fm"})
        CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("config errors exit with 1")
{
    CHECK(invoke({"run", "--problem", "nope"}).code == 1);
    CHECK(invoke({"run", "--algo", "ga"}).code == 1);
    CHECK(invoke({"run", "--wf", "2"}).code == 1);
    CHECK(invoke({"run", "--unknown-flag"}).code == 1);
    CHECK(invoke({"run", "--record", "positions", "--runs", "1"}).code == 1);
    CHECK(invoke({}).code == 1);
    const Invocation bad = invoke({"run", "--problem", "nope"});
    CHECK(bad.err.find("nope") != std::string::npos);
}

TEST_CASE("I/O errors exit with 2")
{
    const fs::path blocker = scratch("blocker");
    std::ofstream(blocker) << "x";
    CHECK(invoke({"run", "--runs", "1", "--iters", "2", "--out", (blocker / "sub").string()}).code == 2);
    CHECK(invoke({"run", "--config", (blocker / "missing.conf").string()}).code == 2);
    fs::remove(blocker);
}

TEST_CASE("config file supplies defaults and flags override it")
{
    const fs::path dir = scratch("config");
    fs::create_directories(dir);
    {
        std::ofstream conf(dir / "exp.conf");
        conf << "# experiment defaults\nproblem=tf3\nruns=3\niters=10\n";
    }
    REQUIRE(invoke({"run", "--config", (dir / "exp.conf").string(), "--runs", "2", "--out", dir.string()}).code == 0);
    const auto rows = lines(slurp(dir / "summary.csv"));
    CHECK(rows[1].rfind("tf3,fdo,2,", 0) == 0);
    CHECK(lines(slurp(dir / "series.csv")).size() == 1 + 2 * 10);

    {
        std::ofstream conf(dir / "bad.conf");
        conf << "colour=blue\n";
    }
    CHECK(invoke({"run", "--config", (dir / "bad.conf").string()}).code == 1);
}
