#include <doctest.h>

#include <sstream>

#include "fdo/harness.hpp"

using namespace fdo;

namespace {

std::string series_text(const ExperimentResult& r)
{
    std::ostringstream os;
    write_series_csv(os, r);
    return os.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("config validation")
{
    ExperimentConfig c;
    CHECK_NOTHROW(c.validate());
    c.runs = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.runs = 1;
    c.record = RecordLevel::positions;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.dimension = 2;
    CHECK_NOTHROW(c.validate());
    c.problem = "antenna";
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.problem = "tf99";
    c.record = RecordLevel::series;
    CHECK_THROWS_AS(run_experiment(c), ConfigError);
    CHECK_THROWS_AS(parse_algorithm("ga"), ConfigError);
    CHECK(parse_algorithm("pso") == Algorithm::pso);
}

TEST_CASE("replications are independent of thread count")
{
    ExperimentConfig c;
    c.problem = "tf10";
    c.runs = 6;
    c.iterations = 40;
    c.population = 8;
    const ExperimentResult serial = run_experiment(c, 1);
    const ExperimentResult parallel = run_experiment(c, 4);
    CHECK(serial.finals == parallel.finals);
    CHECK(series_text(serial) == series_text(parallel));
    CHECK(serial.summary.n == 6);

    // replication k is the single run seeded with seed + k
    ExperimentConfig single = c;
    single.runs = 1;
    single.seed = c.seed + 3;
    CHECK(run_experiment(single, 1).finals[0] == serial.finals[3]);
}

TEST_CASE("a fixed single run repeats exactly")
{
    ExperimentConfig c;
    c.runs = 1;
    c.iterations = 50;
    c.seed = 99;
    CHECK(series_text(run_experiment(c)) == series_text(run_experiment(c)));
}

TEST_CASE("position protocol: 150 iterations of 10 agents in two dimensions")
{
    ExperimentConfig c;
    c.problem = "tf1";
    c.dimension = 2;
    c.population = 10;
    c.iterations = 150;
    c.runs = 1;
    c.record = RecordLevel::positions;
    const ExperimentResult r = run_experiment(c);
    std::ostringstream os;
    write_positions_csv(os, r);
    const std::string text = os.str();
    CHECK(text.rfind("run,iteration,agent,x0,x1\n", 0) == 0);
    CHECK(count_lines(text) == 1 + 150 * 10);
    CHECK(count_lines(series_text(r)) == 1 + 150);
}

TEST_CASE("average fitness improves on TF1 for every seed")
{
    ExperimentConfig c;
    c.runs = 10;
    c.iterations = 100;
    const ExperimentResult r = run_experiment(c);
    for (const RunResult& run : r.runs) {
        REQUIRE(run.record.size() == 100);
        CHECK(run.record.avg_fitness.back() < run.record.avg_fitness.front());
    }
}

TEST_CASE("comparing a config with itself gives p = 1")
{
    ExperimentConfig c;
    c.problem = "tf3";
    c.runs = 8;
    c.iterations = 30;
    const ComparisonRow row = compare(c, c);
    CHECK(row.test.p_value == 1.0);
    CHECK(row.a.mean == row.b.mean);
    CHECK(row.problem == "tf3");
}

TEST_CASE("comparing different problems is a config error")
{
    ExperimentConfig a;
    ExperimentConfig b;
    b.problem = "tf2";
    CHECK_THROWS_AS(compare(a, b), ConfigError);
}

TEST_CASE("csv headers and number formatting")
{
    ExperimentConfig c;
    c.runs = 2;
    c.iterations = 3;
    c.wf = 1;
    const ExperimentResult r = run_experiment(c);
    std::ostringstream summary;
    write_summary_csv(summary, std::span(&r, 1));
    CHECK(summary.str().rfind("problem,algorithm,runs,mean,std\ntf1,fdo-wf1,2,", 0) == 0);
    CHECK(series_text(r).rfind("run,iteration,best_fitness,avg_fitness,trajectory\n0,1,", 0) == 0);

    std::ostringstream cmp;
    const std::vector<ComparisonRow> rows{compare(r, r)};
    write_compare_csv(cmp, rows);
    CHECK(cmp.str().rfind("problem,algo_a,algo_b,mean_a,std_a,mean_b,std_b,p_value\n", 0) == 0);

    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(9000) == "9000");
    CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}
