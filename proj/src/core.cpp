#include "fdo/core.hpp"

#include <cmath>
#include <string>

namespace fdo {

void FdoParams::validate() const
{
    if (weight_factor != 0 && weight_factor != 1)
        throw ArgumentError("weight factor must be 0 or 1, got " + std::to_string(weight_factor));
    if (population_size < 1)
        throw ArgumentError("population size must be at least 1");
    if (max_iterations < 1)
        throw ArgumentError("iteration count must be at least 1");
    if (!(levy.beta > 0.0 && levy.beta <= 2.0) || !(levy.scale > 0.0))
        throw ArgumentError("Levy parameters out of range");
}

void SwarmState::offer(const Agent& agent, Direction dir)
{
    if (strictly_better(agent.fitness, best.fitness, dir)) {
        best.position = agent.position;
        best.fitness = agent.fitness;
    }
}

double fitness_weight(double best_fitness, double current_fitness, int wf, Direction dir)
{
    const double num = dir == Direction::minimize ? best_fitness : current_fitness;
    const double den = dir == Direction::minimize ? current_fitness : best_fitness;
    if (den == 0.0)
        return 0.0;
    return std::abs(num / den) - wf;
}

Eigen::VectorXd pace(const Eigen::VectorXd& position, const Eigen::VectorXd& best_position, double fw,
                     const Eigen::VectorXd& r)
{
    if (position.size() != best_position.size() || position.size() != r.size())
        throw ArgumentError("pace: dimension mismatch");
    if (!directed_weight(fw))
        return position.cwiseProduct(r);
    const Eigen::VectorXd sign = r.unaryExpr([](double v) { return v < 0.0 ? -1.0 : 1.0; });
    return ((position - best_position) * fw).cwiseProduct(sign);
}

Eigen::VectorXd pace(const Agent& agent, const Eigen::VectorXd& best_position, double fw, Rng& rng,
                     const LevyParams& levy)
{
    if (agent.position.size() != best_position.size())
        throw ArgumentError("pace: dimension mismatch");
    return pace(agent.position, best_position, fw, levy_r(rng, agent.position.size(), levy));
}

StepOutcome attempt_moves(const Agent& agent, const Eigen::VectorXd& fresh_pace, const Problem& problem,
                          Direction dir, Rng& rng)
{
    StepOutcome out{agent, MoveKind::stayed, 0};

    auto try_pace = [&](const Eigen::VectorXd& p, MoveKind kind) {
        Eigen::VectorXd candidate = problem.clamp(agent.position + p);
        const double f = problem.evaluate(candidate, rng);
        ++out.evaluations;
        if (!strictly_better(f, agent.fitness, dir))
            return false;
        out.agent.last_pace = candidate - agent.position;
        out.agent.position = std::move(candidate);
        out.agent.fitness = f;
        out.kind = kind;
        return true;
    };

    if (try_pace(fresh_pace, MoveKind::fresh_pace))
        return out;
    if (agent.last_pace)
        try_pace(*agent.last_pace, MoveKind::previous_pace);
    return out;
}

StepOutcome step_agent(const Agent& agent, SwarmState& state, const FdoParams& params, const Problem& problem,
                       Rng& rng)
{
    const double fw = fitness_weight(state.best.fitness, agent.fitness, params.weight_factor, params.direction);
    const Eigen::VectorXd fresh = pace(agent, state.best.position, fw, rng, params.levy);
    StepOutcome out = attempt_moves(agent, fresh, problem, params.direction, rng);
    state.offer(out.agent, params.direction);
    return out;
}

SwarmState initialize_swarm(const Problem& problem, const FdoParams& params, Rng& rng)
{
    SwarmState state;
    state.agents.reserve(static_cast<std::size_t>(params.population_size));
    for (int i = 0; i < params.population_size; ++i) {
        Agent a;
        a.position = rng.uniform(problem.lower, problem.upper);
        a.fitness = problem.evaluate(a.position, rng);
        if (i == 0) {
            state.best = {a.position, a.fitness};
        } else {
            state.offer(a, params.direction);
        }
        state.agents.push_back(std::move(a));
    }
    return state;
}

namespace {

void record_iteration(RunRecord& record, const SwarmState& state, bool with_positions)
{
    double sum = 0.0;
    for (const Agent& a : state.agents)
        sum += a.fitness;
    record.best_fitness.push_back(state.best.fitness);
    record.avg_fitness.push_back(sum / static_cast<double>(state.agents.size()));
    record.trajectory.push_back(state.agents.front().position[0]);
    if (with_positions) {
        Eigen::MatrixXd snapshot(static_cast<Eigen::Index>(state.agents.size()), state.agents.front().position.size());
        for (std::size_t i = 0; i < state.agents.size(); ++i)
            snapshot.row(static_cast<Eigen::Index>(i)) = state.agents[i].position.transpose();
        record.positions.push_back(std::move(snapshot));
    }
}

}  // namespace

RunResult run(const Problem& problem, const FdoParams& params, std::uint64_t seed, const RunOptions& options)
{
    params.validate();
    if (params.direction != problem.direction)
        throw ArgumentError("FDO direction does not match the problem direction");

    Rng rng(seed);
    SwarmState state = initialize_swarm(problem, params, rng);

    RunResult result;
    result.evaluations = state.agents.size();
    result.record.reserve(static_cast<std::size_t>(params.max_iterations));

    for (int t = 0; t < params.max_iterations; ++t) {
        state.iteration = t;
        for (std::size_t i = 0; i < state.agents.size(); ++i) {
            StepOutcome out = step_agent(state.agents[i], state, params, problem, rng);
            result.evaluations += static_cast<std::size_t>(out.evaluations);
            if (options.on_step)
                options.on_step(StepEvent{t, i, state.agents[i], out, state.best});
            state.agents[i] = std::move(out.agent);
        }
        state.iteration = t + 1;
        record_iteration(result.record, state, options.record_positions);
    }

    result.best_position = state.best.position;
    result.best_fitness = state.best.fitness;
    return result;
}

}  // namespace fdo
