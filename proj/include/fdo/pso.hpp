#ifndef FDO_PSO_HPP
#define FDO_PSO_HPP

#include <cstdint>

#include "fdo/problem.hpp"
#include "fdo/run_record.hpp"

namespace fdo {

/// Global-best PSO settings. Inertia decreases linearly from w_start to w_end
/// over the run; velocities are clamped to +-velocity_clamp * (upper - lower).
struct PsoParams {
    int population_size = 30;
    int max_iterations = 500;
    double w_start = 0.9;
    double w_end = 0.4;
    double c1 = 2.0;
    double c2 = 2.0;
    double velocity_clamp = 0.1;

    void validate() const;
};

/// Canonical gbest PSO; same record layout as the FDO run.
RunResult pso_run(const Problem& problem, const PsoParams& params, std::uint64_t seed, bool record_positions = false);

}  // namespace fdo

#endif  // FDO_PSO_HPP
