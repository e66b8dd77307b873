#include "fdo/problem.hpp"

#include <cmath>

namespace fdo {

double Problem::evaluate(const Eigen::VectorXd& x, Rng& rng) const
{
    if (x.size() != dimension())
        throw ArgumentError(name + ": expected dimension " + std::to_string(dimension()) + ", got " +
                            std::to_string(x.size()));
    const double f = evaluator(x, rng);
    if (std::isnan(f))
        throw EvaluationError(name + ": objective returned NaN");
    return f;
}

void Problem::validate() const
{
    if (dimension() < 1)
        throw ArgumentError(name + ": dimension must be positive");
    if (upper.size() != dimension() || shift.size() != dimension())
        throw ArgumentError(name + ": bound/shift sizes differ");
    if (!(lower.array() < upper.array()).all())
        throw ArgumentError(name + ": lower bound must be below upper bound");
    if (!contains(shift))
        throw ArgumentError(name + ": shift lies outside the box");
    if (!evaluator)
        throw ArgumentError(name + ": missing evaluator");
}

}  // namespace fdo
