#ifndef FDO_CORE_HPP
#define FDO_CORE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "fdo/problem.hpp"
#include "fdo/run_record.hpp"
#include "fdo/stochastic.hpp"

namespace fdo {

struct FdoParams {
    int weight_factor = 0;  ///< wf, either 0 or 1
    int population_size = 30;
    int max_iterations = 500;
    Direction direction = Direction::minimize;
    LevyParams levy;

    /// Throws ArgumentError when wf is not 0/1 or a size is not positive.
    void validate() const;
};

/// One artificial scout.
struct Agent {
    Eigen::VectorXd position;
    double fitness = 0.0;
    std::optional<Eigen::VectorXd> last_pace;  ///< set once a move has been accepted
};

struct GlobalBest {
    Eigen::VectorXd position;
    double fitness = 0.0;
};

struct SwarmState {
    std::vector<Agent> agents;
    GlobalBest best;
    int iteration = 0;

    /// Replaces the global best when `agent` is strictly better.
    void offer(const Agent& agent, Direction dir);
};

/// Fitness weight: |best / current| - wf when minimizing, |current / best| - wf
/// when maximizing. A zero denominator yields 0.
double fitness_weight(double best_fitness, double current_fitness, int wf, Direction dir);

/// True when the weight selects the directed pace rule, i.e. 0 < fw < 1.
inline bool directed_weight(double fw) { return fw > 0.0 && fw < 1.0; }

/// Pace for given directional numbers r (one per coordinate, each in [-1, 1]).
/// Directed rule (0 < fw < 1): (x - x*) * fw, negated where r < 0.
/// Otherwise: x * r.
Eigen::VectorXd pace(const Eigen::VectorXd& position, const Eigen::VectorXd& best_position, double fw,
                     const Eigen::VectorXd& r);

/// Draws r from the Levy generator and applies the pace rule.
Eigen::VectorXd pace(const Agent& agent, const Eigen::VectorXd& best_position, double fw, Rng& rng,
                     const LevyParams& levy = {});

enum class MoveKind { fresh_pace, previous_pace, stayed };

struct StepOutcome {
    Agent agent;
    MoveKind kind = MoveKind::stayed;
    int evaluations = 0;
};

/// Acceptance ladder for a precomputed fresh pace: try x + pace, then
/// x + last_pace, otherwise keep the agent. Candidates are clamped to the box
/// and the saved pace is the clamped displacement.
StepOutcome attempt_moves(const Agent& agent, const Eigen::VectorXd& fresh_pace, const Problem& problem,
                          Direction dir, Rng& rng);

/// One full agent update: weight, pace, acceptance ladder, then global-best update.
StepOutcome step_agent(const Agent& agent, SwarmState& state, const FdoParams& params, const Problem& problem,
                       Rng& rng);

/// Everything an observer may inspect after one agent update.
struct StepEvent {
    int iteration;
    std::size_t agent_index;
    const Agent& before;
    const StepOutcome& outcome;
    const GlobalBest& best;
};

struct RunOptions {
    bool record_positions = false;
    std::function<void(const StepEvent&)> on_step;
};

/// Uniform random initial population inside the box.
SwarmState initialize_swarm(const Problem& problem, const FdoParams& params, Rng& rng);

/// Runs FDO for params.max_iterations iterations from `seed`.
RunResult run(const Problem& problem, const FdoParams& params, std::uint64_t seed, const RunOptions& options = {});

}  // namespace fdo

#endif  // FDO_CORE_HPP
