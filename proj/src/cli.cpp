#include "fdo/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdo/harness.hpp"
#include "fdo/problems.hpp"

namespace fdo {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flag values shared by run, compare and metrics before they are turned into an ExperimentConfig.
struct Flags {
    std::string problem = "tf1";
    std::string algo = "fdo";
    Eigen::Index dims = 0;  // 0: problem table dimension
    int agents = 30;
    int iters = 500;
    int runs = 30;
    int wf = 0;
    std::uint64_t seed = 1;
    std::string record = "summary";
    std::string out = ".";
    int fm_nested = 0;
    bool unshifted = false;
    std::string config;
};

void add_common(CLI::App* sub, Flags& f)
{
    sub->add_option("--config", f.config, "key=value file supplying defaults; command-line flags override it");
    sub->allow_config_extras(CLI::config_extras_mode::error);
    sub->add_option("--problem", f.problem, "problem name (see `list`)")->capture_default_str();
    sub->add_option("--dims", f.dims, "dimension (scalable problems only)")->check(CLI::PositiveNumber);
    sub->add_option("--agents", f.agents, "population size")->capture_default_str();
    sub->add_option("--iters", f.iters, "iterations per run")->capture_default_str();
    sub->add_option("--runs", f.runs, "independent replications")->capture_default_str();
    sub->add_option("--seed", f.seed, "seed of the first replication; run k uses seed + k")->capture_default_str();
    sub->add_option("--out", f.out, "output directory")->capture_default_str();
    sub->add_option("--fm-nested", f.fm_nested, "nested-modulation FM objective")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    sub->add_flag("--unshifted", f.unshifted, "leave TF1..TF13 at their unshifted optimum");
}

ExperimentConfig to_config(const Flags& f, std::string_view algo)
{
    ExperimentConfig c;
    c.problem = f.problem;
    c.wf = f.wf;
    // "fdo-wf0" / "fdo-wf1" select the weight factor alongside the algorithm
    if (algo == "fdo-wf0" || algo == "fdo-wf1") {
        c.algorithm = Algorithm::fdo;
        c.wf = algo.back() - '0';
    } else {
        c.algorithm = parse_algorithm(algo);
    }
    if (f.dims > 0)
        c.dimension = f.dims;
    c.population = f.agents;
    c.iterations = f.iters;
    c.runs = f.runs;
    c.seed = f.seed;
    c.record = parse_record_level(f.record);
    c.fm_nested = f.fm_nested != 0;
    c.relocate_optimum = !f.unshifted;
    return c;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open " + path.string() + " for writing");
    body(file);
    file.flush();
    if (!file)
        throw IoError("write failed: " + path.string());
}

fs::path prepare_out(const std::string& dir)
{
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec || !fs::is_directory(p))
        throw IoError("cannot create output directory " + dir);
    return p;
}

/// Fills options not given on the command line from the subcommand's --config file.
void apply_config_file(CLI::App* sub, const Flags& f)
{
    if (f.config.empty())
        return;
    std::ifstream file(f.config);
    if (!file)
        throw IoError("cannot read config file " + f.config);
    sub->parse_from_stream(file);
}

void emit_experiment(const fs::path& dir, const ExperimentResult& r)
{
    write_file(dir / "summary.csv", [&](std::ostream& os) { write_summary_csv(os, std::span(&r, 1)); });
    write_file(dir / "series.csv", [&](std::ostream& os) { write_series_csv(os, r); });
    if (r.config.record == RecordLevel::positions)
        write_file(dir / "positions.csv", [&](std::ostream& os) { write_positions_csv(os, r); });
}

void print_summary(std::ostream& out, const ExperimentResult& r)
{
    out << r.problem_name << ' ' << r.config.label() << " runs=" << r.summary.n << " mean=" << format_real(r.summary.mean)
        << " std=" << format_real(r.summary.std) << '\n';
}

void list_problems(std::ostream& out)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-12s %5s %-9s %12s %12s  %s\n", "name", "family", "dim", "scalable", "lower",
                  "upper", "f_min");
    out << line;
    for (const ProblemInfo& p : problem_registry()) {
        std::snprintf(line, sizeof line, "%-8s %-12s %5lld %-9s %12g %12g  %s\n", p.name.c_str(), p.family.c_str(),
                      static_cast<long long>(p.default_dimension), p.scalable ? "yes" : "no", p.lower, p.upper,
                      p.f_min ? format_real(*p.f_min).c_str() : "-");
        out << line;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fitness Dependent Optimizer benchmark harness", "fdo_bench"};
    app.require_subcommand(1);

    Flags run_flags;
    auto* run_cmd = app.add_subcommand("run", "run one experiment; writes summary.csv and series.csv");
    add_common(run_cmd, run_flags);
    run_cmd->add_option("--algo", run_flags.algo, "fdo | pso")->capture_default_str();
    run_cmd->add_option("--wf", run_flags.wf, "FDO weight factor")->check(CLI::IsMember({0, 1}))->capture_default_str();
    run_cmd->add_option("--record", run_flags.record, "summary | series | positions")
        ->check(CLI::IsMember({"summary", "series", "positions"}))
        ->capture_default_str();

    Flags cmp_flags;
    std::string algo_a = "fdo";
    std::string algo_b = "pso";
    auto* cmp_cmd = app.add_subcommand("compare", "run two algorithms on one problem; writes compare.csv");
    add_common(cmp_cmd, cmp_flags);
    cmp_cmd->add_option("--a", algo_a, "first algorithm: fdo | fdo-wf0 | fdo-wf1 | pso")->capture_default_str();
    cmp_cmd->add_option("--b", algo_b, "second algorithm")->capture_default_str();
    cmp_cmd->add_option("--wf", cmp_flags.wf, "weight factor for plain `fdo`")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();

    Flags met_flags;
    met_flags.agents = 10;
    met_flags.dims = 2;
    met_flags.iters = 150;
    met_flags.runs = 1;
    met_flags.record = "positions";
    auto* met_cmd = app.add_subcommand("metrics", "search-history protocol; writes positions.csv and series.csv");
    add_common(met_cmd, met_flags);
    met_cmd->add_option("--algo", met_flags.algo, "fdo | pso")->capture_default_str();
    met_cmd->add_option("--wf", met_flags.wf, "FDO weight factor")->check(CLI::IsMember({0, 1}))->capture_default_str();

    app.add_subcommand("list", "print the problem registry");

    try {
        app.parse(argc, argv);
        apply_config_file(run_cmd, run_flags);
        apply_config_file(cmp_cmd, cmp_flags);
        apply_config_file(met_cmd, met_flags);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::FileError& e) {
        err << "fdo_bench: " << e.what() << '\n';
        return exit_io_error;
    } catch (const CLI::ParseError& e) {
        err << "fdo_bench: " << e.what() << '\n';
        return exit_config_error;
    } catch (const IoError& e) {
        err << "fdo_bench: " << e.what() << '\n';
        return exit_io_error;
    }

    try {
        if (app.got_subcommand("list")) {
            list_problems(out);
        } else if (app.got_subcommand(run_cmd)) {
            const ExperimentConfig config = to_config(run_flags, run_flags.algo);
            config.validate();
            const fs::path dir = prepare_out(run_flags.out);
            const ExperimentResult result = run_experiment(config);
            emit_experiment(dir, result);
            print_summary(out, result);
        } else if (app.got_subcommand(met_cmd)) {
            const ExperimentConfig config = to_config(met_flags, met_flags.algo);
            config.validate();
            const fs::path dir = prepare_out(met_flags.out);
            const ExperimentResult result = run_experiment(config);
            emit_experiment(dir, result);
            print_summary(out, result);
        } else if (app.got_subcommand(cmp_cmd)) {
            const ExperimentConfig ca = to_config(cmp_flags, algo_a);
            const ExperimentConfig cb = to_config(cmp_flags, algo_b);
            ca.validate();
            cb.validate();
            const fs::path dir = prepare_out(cmp_flags.out);
            const std::vector<ExperimentResult> results{run_experiment(ca), run_experiment(cb)};
            const std::vector<ComparisonRow> rows{compare(results[0], results[1])};
            write_file(dir / "compare.csv", [&](std::ostream& os) { write_compare_csv(os, rows); });
            write_file(dir / "summary.csv", [&](std::ostream& os) { write_summary_csv(os, results); });
            for (const ExperimentResult& r : results)
                print_summary(out, r);
            out << "p_value=" << format_real(rows[0].test.p_value) << '\n';
        }
    } catch (const ConfigError& e) {
        err << "fdo_bench: " << e.what() << '\n';
        return exit_config_error;
    } catch (const IoError& e) {
        err << "fdo_bench: " << e.what() << '\n';
        return exit_io_error;
    } catch (const std::invalid_argument& e) {
        err << "fdo_bench: " << e.what() << '\n';
        return exit_config_error;
    }
    return exit_ok;
}

}  // namespace fdo
