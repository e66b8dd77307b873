#ifndef FDO_APPS_HPP
#define FDO_APPS_HPP

#include <array>
#include <numbers>

#include <Eigen/Core>

#include "fdo/problem.hpp"

namespace fdo::apps {

/// Symmetric aperiodic array: four free element positions per side, in
/// wavelengths, plus an outermost element fixed at 2.25.
struct AntennaLayout {
    static constexpr double fixed_element = 2.25;
    static constexpr double min_gap = 0.25;
    static constexpr double min_position = 0.125;

    std::array<double, 4> x{};
    double steering = std::numbers::pi / 2;  ///< theta_s in radians

    static AntennaLayout from(const Eigen::VectorXd& v);
};

/// Number of violated feasibility clauses: positions outside (0, 2.25), the
/// minimum position not above 0.125, and each pair (fixed element included)
/// closer than 0.25.
int constraint_violations(const AntennaLayout& layout);

inline bool feasible(const AntennaLayout& layout) { return constraint_violations(layout) == 0; }

/// Array factor at polar angle theta (radians).
double array_factor(const AntennaLayout& layout, double theta);

/// Array factor as a function of u = cos(theta).
double array_factor_u(const AntennaLayout& layout, double u);

inline constexpr int sll_grid_points = 4001;
inline constexpr double infeasibility_penalty = 100.0;

/// Peak sidelobe level in dB outside the main lobe, which is delimited by
/// the first null of |AF| on each side of the steering direction.
double peak_sidelobe_level(const AntennaLayout& layout);

/// Peak sidelobe level plus 100 per violated feasibility clause.
double antenna_fitness(const AntennaLayout& layout);

/// FM synthesis parameters {a1, w1, a2, w2, a3, w3}.
struct FmParams {
    static constexpr double lower = -6.4;
    static constexpr double upper = 6.35;
    static constexpr double theta = 2 * std::numbers::pi / 100;

    std::array<double, 6> p{};

    static FmParams from(const Eigen::VectorXd& v);
    static FmParams target() { return {{1.0, 5.0, 1.5, 4.8, 2.0, 4.9}}; }
};

/// Additive form a1 sin(w1 t th) + a2 sin(w2 t th) + a3 sin(w3 t th), or
/// the nested modulation a1 sin(w1 t th + a2 sin(w2 t th + a3 sin(w3 t th))).
double fm_wave(const FmParams& params, int t, bool nested = false);

/// Sum of squared residuals against the target wave over t = 0..100.
double fm_fitness(const FmParams& params, bool nested = false);

Problem make_antenna_problem();
Problem make_fm_problem(bool nested = false);

}  // namespace fdo::apps

#endif  // FDO_APPS_HPP
