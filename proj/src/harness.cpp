#include "fdo/harness.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "fdo/core.hpp"
#include "fdo/problems.hpp"
#include "fdo/pso.hpp"

namespace fdo {

Algorithm parse_algorithm(std::string_view name)
{
    if (name == "fdo")
        return Algorithm::fdo;
    if (name == "pso")
        return Algorithm::pso;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected fdo or pso)");
}

RecordLevel parse_record_level(std::string_view name)
{
    if (name == "summary")
        return RecordLevel::summary;
    if (name == "series")
        return RecordLevel::series;
    if (name == "positions")
        return RecordLevel::positions;
    throw ConfigError("unknown record level '" + std::string(name) + "'");
}

const char* to_string(Algorithm algo) { return algo == Algorithm::fdo ? "fdo" : "pso"; }

const char* to_string(RecordLevel level)
{
    switch (level) {
    case RecordLevel::summary: return "summary";
    case RecordLevel::series: return "series";
    case RecordLevel::positions: return "positions";
    }
    return "summary";
}

void ExperimentConfig::validate() const
{
    if (runs < 1)
        throw ConfigError("runs must be at least 1");
    if (population < 1)
        throw ConfigError("agents must be at least 1");
    if (iterations < 1)
        throw ConfigError("iterations must be at least 1");
    if (wf != 0 && wf != 1)
        throw ConfigError("wf must be 0 or 1");
    if (dimension && *dimension < 1)
        throw ConfigError("dimension must be positive");
    if (record == RecordLevel::positions) {
        const Eigen::Index n = make_problem(*this).dimension();
        if (n != 2)
            throw ConfigError("position recording needs a two-dimensional problem, got " + std::to_string(n));
    }
}

std::string ExperimentConfig::label() const
{
    if (algorithm == Algorithm::fdo && wf == 1)
        return "fdo-wf1";
    return to_string(algorithm);
}

Problem make_problem(const ExperimentConfig& config)
{
    ProblemOptions options;
    options.dimension = config.dimension;
    options.fm_nested = config.fm_nested;
    options.relocate_optimum = config.relocate_optimum;
    try {
        return make_problem(config.problem, options);
    } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
    }
}

unsigned replication_threads()
{
    if (const char* env = std::getenv("FDO_BENCH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

RunResult replicate(const Problem& problem, const ExperimentConfig& config, std::uint64_t seed)
{
    const bool positions = config.record == RecordLevel::positions;
    if (config.algorithm == Algorithm::pso) {
        PsoParams params;
        params.population_size = config.population;
        params.max_iterations = config.iterations;
        return pso_run(problem, params, seed, positions);
    }
    FdoParams params;
    params.weight_factor = config.wf;
    params.population_size = config.population;
    params.max_iterations = config.iterations;
    params.direction = problem.direction;
    params.levy = config.levy;
    RunOptions options;
    options.record_positions = positions;
    return run(problem, params, seed, options);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads)
{
    config.validate();
    const Problem problem = make_problem(config);

    const auto runs = static_cast<std::size_t>(config.runs);
    ExperimentResult result;
    result.config = config;
    result.problem_name = problem.name;
    result.runs.resize(runs);

    if (threads == 0)
        threads = replication_threads();
    threads = std::min<unsigned>(threads, static_cast<unsigned>(runs));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < runs; k = next++) {
            try {
                result.runs[k] = replicate(problem, config, config.seed + k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    result.finals.reserve(runs);
    for (const RunResult& r : result.runs)
        result.finals.push_back(r.best_fitness);
    result.summary = stats::summarize(result.finals);
    return result;
}

ComparisonRow compare(const ExperimentResult& a, const ExperimentResult& b)
{
    if (a.problem_name != b.problem_name)
        throw ConfigError("compare: problems differ ('" + a.problem_name + "' vs '" + b.problem_name + "')");
    ComparisonRow row;
    row.problem = a.problem_name;
    row.algo_a = a.config.label();
    row.algo_b = b.config.label();
    row.a = a.summary;
    row.b = b.summary;
    row.test = stats::wilcoxon_rank_sum(a.finals, b.finals);
    return row;
}

ComparisonRow compare(const ExperimentConfig& config_a, const ExperimentConfig& config_b, unsigned threads)
{
    if (config_a.problem != config_b.problem)
        throw ConfigError("compare: problems differ ('" + config_a.problem + "' vs '" + config_b.problem + "')");
    return compare(run_experiment(config_a, threads), run_experiment(config_b, threads));
}

std::string format_real(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_series_csv(std::ostream& out, const ExperimentResult& result)
{
    out << "run,iteration,best_fitness,avg_fitness,trajectory\n";
    for (std::size_t k = 0; k < result.runs.size(); ++k) {
        const RunRecord& rec = result.runs[k].record;
        for (std::size_t t = 0; t < rec.size(); ++t)
            out << k << ',' << t + 1 << ',' << format_real(rec.best_fitness[t]) << ','
                << format_real(rec.avg_fitness[t]) << ',' << format_real(rec.trajectory[t]) << '\n';
    }
}

void write_positions_csv(std::ostream& out, const ExperimentResult& result)
{
    out << "run,iteration,agent,x0,x1\n";
    for (std::size_t k = 0; k < result.runs.size(); ++k) {
        const RunRecord& rec = result.runs[k].record;
        for (std::size_t t = 0; t < rec.positions.size(); ++t) {
            const Eigen::MatrixXd& pos = rec.positions[t];
            for (Eigen::Index a = 0; a < pos.rows(); ++a) {
                out << k << ',' << t + 1 << ',' << a << ',' << format_real(pos(a, 0)) << ','
                    << format_real(pos.cols() > 1 ? pos(a, 1) : 0.0) << '\n';
            }
        }
    }
}

void write_summary_csv(std::ostream& out, std::span<const ExperimentResult> results)
{
    out << "problem,algorithm,runs,mean,std\n";
    for (const ExperimentResult& r : results)
        out << r.problem_name << ',' << r.config.label() << ',' << r.summary.n << ',' << format_real(r.summary.mean)
            << ',' << format_real(r.summary.std) << '\n';
}

void write_compare_csv(std::ostream& out, std::span<const ComparisonRow> rows)
{
    out << "problem,algo_a,algo_b,mean_a,std_a,mean_b,std_b,p_value\n";
    for (const ComparisonRow& row : rows)
        out << row.problem << ',' << row.algo_a << ',' << row.algo_b << ',' << format_real(row.a.mean) << ','
            << format_real(row.a.std) << ',' << format_real(row.b.mean) << ',' << format_real(row.b.std) << ','
            << format_real(row.test.p_value) << '\n';
}

}  // namespace fdo
