#ifndef FDO_HARNESS_HPP
#define FDO_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fdo/problem.hpp"
#include "fdo/run_record.hpp"
#include "fdo/stats.hpp"
#include "fdo/stochastic.hpp"

namespace fdo {

/// Invalid experiment configuration (unknown problem or algorithm, bad sizes).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Algorithm { fdo, pso };
enum class RecordLevel { summary, series, positions };

Algorithm parse_algorithm(std::string_view name);
RecordLevel parse_record_level(std::string_view name);
const char* to_string(Algorithm algo);
const char* to_string(RecordLevel level);

struct ExperimentConfig {
    std::string problem = "tf1";
    Algorithm algorithm = Algorithm::fdo;
    std::optional<Eigen::Index> dimension;  ///< table dimension when unset
    int population = 30;
    int iterations = 500;
    int runs = 30;
    int wf = 0;
    std::uint64_t seed = 1;
    RecordLevel record = RecordLevel::summary;
    bool fm_nested = false;
    bool relocate_optimum = true;
    LevyParams levy;

    /// Throws ConfigError on invalid values, including position recording away from two dimensions.
    void validate() const;

    /// Algorithm name as written to CSV: "fdo", "pso", or "fdo-wf1" when the weight factor is 1.
    std::string label() const;
};

/// Builds the configured problem. Throws ConfigError for unknown names or unsupported dimensions.
Problem make_problem(const ExperimentConfig& config);

struct ExperimentResult {
    ExperimentConfig config;
    std::string problem_name;
    std::vector<double> finals;  ///< final global best per replication, in replication order
    stats::SampleSummary summary;
    std::vector<RunResult> runs;
};

/// Replication parallelism: FDO_BENCH_THREADS when set to a positive integer, else the hardware concurrency.
unsigned replication_threads();

/// Executes config.runs replications with seeds seed, seed + 1, ... and aggregates them by replication index.
/// `threads` = 0 uses replication_threads().
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads = 0);

struct ComparisonRow {
    std::string problem;
    std::string algo_a;
    std::string algo_b;
    stats::SampleSummary a;
    stats::SampleSummary b;
    stats::WilcoxonResult test;
};

/// Runs both experiments and applies the rank-sum test to their final-best samples.
/// Throws ConfigError when the configs name different problems.
ComparisonRow compare(const ExperimentConfig& config_a, const ExperimentConfig& config_b, unsigned threads = 0);

ComparisonRow compare(const ExperimentResult& a, const ExperimentResult& b);

/// Shortest round-trip-safe rendering: 17 significant digits.
std::string format_real(double value);

void write_series_csv(std::ostream& out, const ExperimentResult& result);
void write_positions_csv(std::ostream& out, const ExperimentResult& result);
void write_summary_csv(std::ostream& out, std::span<const ExperimentResult> results);
void write_compare_csv(std::ostream& out, std::span<const ComparisonRow> rows);

}  // namespace fdo

#endif  // FDO_HARNESS_HPP
