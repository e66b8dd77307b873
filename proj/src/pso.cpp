#include "fdo/pso.hpp"

#include <algorithm>
#include <vector>

#include "fdo/stochastic.hpp"

namespace fdo {

void PsoParams::validate() const
{
    if (population_size < 1 || max_iterations < 1)
        throw ArgumentError("PSO population and iteration count must be positive");
    if (!(c1 > 0.0) || !(c2 > 0.0))
        throw ArgumentError("PSO coefficients c1 and c2 must be positive");
    if (!(w_end >= 0.0 && w_end <= w_start))
        throw ArgumentError("PSO inertia schedule must satisfy 0 <= w_end <= w_start");
    if (!(velocity_clamp > 0.0))
        throw ArgumentError("PSO velocity clamp must be positive");
}

RunResult pso_run(const Problem& problem, const PsoParams& params, std::uint64_t seed, bool record_positions)
{
    params.validate();
    const Direction dir = problem.direction;
    const Eigen::Index n = problem.dimension();
    const auto m = static_cast<std::size_t>(params.population_size);
    const Eigen::VectorXd vmax = params.velocity_clamp * (problem.upper - problem.lower);

    Rng rng(seed);
    std::vector<Eigen::VectorXd> x(m), v(m), pbest(m);
    std::vector<double> fit(m), pbest_fit(m);
    Eigen::VectorXd gbest;
    double gbest_fit = 0.0;

    RunResult result;
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = rng.uniform(problem.lower, problem.upper);
        v[i] = rng.uniform(-vmax, vmax);
        fit[i] = problem.evaluate(x[i], rng);
        pbest[i] = x[i];
        pbest_fit[i] = fit[i];
        if (i == 0 || strictly_better(fit[i], gbest_fit, dir)) {
            gbest = x[i];
            gbest_fit = fit[i];
        }
    }
    result.evaluations = m;
    result.record.reserve(static_cast<std::size_t>(params.max_iterations));

    const int iters = params.max_iterations;
    for (int t = 0; t < iters; ++t) {
        const double w =
            iters > 1 ? params.w_start - (params.w_start - params.w_end) * t / (iters - 1) : params.w_start;
        for (std::size_t i = 0; i < m; ++i) {
            for (Eigen::Index d = 0; d < n; ++d) {
                const double r1 = rng.canonical();
                const double r2 = rng.canonical();
                double vd = w * v[i][d] + params.c1 * r1 * (pbest[i][d] - x[i][d]) +
                            params.c2 * r2 * (gbest[d] - x[i][d]);
                v[i][d] = std::clamp(vd, -vmax[d], vmax[d]);
            }
            x[i] = problem.clamp(x[i] + v[i]);
            fit[i] = problem.evaluate(x[i], rng);
            ++result.evaluations;
            if (strictly_better(fit[i], pbest_fit[i], dir)) {
                pbest[i] = x[i];
                pbest_fit[i] = fit[i];
            }
        }
        // synchronous gbest update after the sweep
        for (std::size_t i = 0; i < m; ++i) {
            if (strictly_better(pbest_fit[i], gbest_fit, dir)) {
                gbest = pbest[i];
                gbest_fit = pbest_fit[i];
            }
        }

        double sum = 0.0;
        for (double f : fit)
            sum += f;
        result.record.best_fitness.push_back(gbest_fit);
        result.record.avg_fitness.push_back(sum / static_cast<double>(m));
        result.record.trajectory.push_back(x.front()[0]);
        if (record_positions) {
            Eigen::MatrixXd snapshot(static_cast<Eigen::Index>(m), n);
            for (std::size_t i = 0; i < m; ++i)
                snapshot.row(static_cast<Eigen::Index>(i)) = x[i].transpose();
            result.record.positions.push_back(std::move(snapshot));
        }
    }

    result.best_position = gbest;
    result.best_fitness = gbest_fit;
    return result;
}

}  // namespace fdo
