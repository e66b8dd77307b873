#ifndef FDO_RUN_RECORD_HPP
#define FDO_RUN_RECORD_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace fdo {

/// Per-iteration history of one replication. Entry t describes the swarm after iteration t + 1.
struct RunRecord {
    std::vector<double> best_fitness;
    std::vector<double> avg_fitness;
    std::vector<double> trajectory;  ///< first coordinate of the first agent
    std::vector<Eigen::MatrixXd> positions;  ///< agents x dimension, only when position recording is on

    std::size_t size() const { return best_fitness.size(); }

    void reserve(std::size_t iterations)
    {
        best_fitness.reserve(iterations);
        avg_fitness.reserve(iterations);
        trajectory.reserve(iterations);
    }
};

/// Exact (bitwise-value) equality of two records.
inline bool identical(const RunRecord& a, const RunRecord& b)
{
    if (a.best_fitness != b.best_fitness || a.avg_fitness != b.avg_fitness || a.trajectory != b.trajectory ||
        a.positions.size() != b.positions.size())
        return false;
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        const auto& pa = a.positions[i];
        const auto& pb = b.positions[i];
        if (pa.rows() != pb.rows() || pa.cols() != pb.cols() || pa != pb)
            return false;
    }
    return true;
}

/// Outcome of a single optimizer run.
struct RunResult {
    Eigen::VectorXd best_position;
    double best_fitness = 0.0;
    RunRecord record;
    std::size_t evaluations = 0;
};

}  // namespace fdo

#endif  // FDO_RUN_RECORD_HPP
