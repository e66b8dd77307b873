#ifndef FDO_PROBLEM_HPP
#define FDO_PROBLEM_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "fdo/stochastic.hpp"

namespace fdo {

enum class Direction { minimize, maximize };

/// True when `candidate` is strictly better than `incumbent` for the given direction.
inline bool strictly_better(double candidate, double incumbent, Direction dir)
{
    return dir == Direction::minimize ? candidate < incumbent : candidate > incumbent;
}

/// Thrown for malformed arguments (dimension mismatch, out-of-range input, bad bounds).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an objective produces a non-finite value or otherwise fails.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Objective evaluator. The rng reference is only consumed by noisy objectives (TF7).
using Evaluator = std::function<double(const Eigen::VectorXd&, Rng&)>;

/// An objective descriptor: box, direction, optimum relocation and evaluator.
struct Problem {
    std::string name;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    Eigen::VectorXd shift;
    Direction direction = Direction::minimize;
    std::optional<double> known_optimum;
    /// Position attaining known_optimum, when known.
    std::optional<Eigen::VectorXd> optimum_position;
    Evaluator evaluator;

    Eigen::Index dimension() const { return lower.size(); }

    /// Evaluates the objective, throwing EvaluationError on a NaN result.
    double evaluate(const Eigen::VectorXd& x, Rng& rng) const;

    /// Coordinate-wise projection onto the box.
    Eigen::VectorXd clamp(const Eigen::VectorXd& x) const
    {
        return x.cwiseMax(lower).cwiseMin(upper);
    }

    bool contains(const Eigen::VectorXd& x) const
    {
        return x.size() == dimension() && (x.array() >= lower.array()).all() &&
               (x.array() <= upper.array()).all();
    }

    /// Checks the structural invariants (sizes, lower < upper, shift inside the box).
    void validate() const;
};

}  // namespace fdo

#endif  // FDO_PROBLEM_HPP
