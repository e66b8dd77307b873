#include "fdo/apps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fdo::apps {

namespace {
constexpr double two_pi = 2 * std::numbers::pi;
constexpr double amplitude_floor = 1e-12;

double db(double af) { return 20.0 * std::log10(std::max(std::abs(af), amplitude_floor)); }
}  // namespace

AntennaLayout AntennaLayout::from(const Eigen::VectorXd& v)
{
    if (v.size() != 4)
        throw ArgumentError("antenna layout needs 4 positions");
    AntennaLayout layout;
    for (int i = 0; i < 4; ++i)
        layout.x[i] = v[i];
    return layout;
}

int constraint_violations(const AntennaLayout& layout)
{
    int count = 0;
    for (double xi : layout.x)
        if (!(xi > 0.0 && xi < AntennaLayout::fixed_element))
            ++count;
    if (!(*std::min_element(layout.x.begin(), layout.x.end()) > AntennaLayout::min_position))
        ++count;
    std::array<double, 5> all{};
    std::copy(layout.x.begin(), layout.x.end(), all.begin());
    all[4] = AntennaLayout::fixed_element;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!(std::abs(all[i] - all[j]) > AntennaLayout::min_gap))
                ++count;
    return count;
}

double array_factor_u(const AntennaLayout& layout, double u)
{
    const double du = u - std::cos(layout.steering);
    double af = std::cos(two_pi * AntennaLayout::fixed_element * du);
    for (double xi : layout.x)
        af += std::cos(two_pi * xi * du);
    return af;
}

double array_factor(const AntennaLayout& layout, double theta)
{
    return array_factor_u(layout, std::cos(theta));
}

double peak_sidelobe_level(const AntennaLayout& layout)
{
    constexpr int n = sll_grid_points;
    std::vector<double> mag(n);
    const double step = 2.0 / (n - 1);
    for (int k = 0; k < n; ++k)
        mag[k] = std::abs(array_factor_u(layout, -1.0 + step * k));

    const double us = std::cos(layout.steering);
    const int centre = std::clamp(static_cast<int>(std::lround((us + 1.0) / step)), 0, n - 1);

    // walk downhill from the main-lobe peak until |AF| stops decreasing
    int right = centre;
    while (right + 1 < n && mag[right + 1] <= mag[right])
        ++right;
    int left = centre;
    while (left - 1 >= 0 && mag[left - 1] <= mag[left])
        --left;

    double peak = -std::numeric_limits<double>::infinity();
    for (int k = right + 1; k < n; ++k)
        peak = std::max(peak, mag[k]);
    for (int k = 0; k < left; ++k)
        peak = std::max(peak, mag[k]);
    if (!std::isfinite(peak))
        // the main lobe spans the whole visible region; report the deeper of the two edges
        peak = std::min(mag[left], mag[right]);
    return db(peak);
}

double antenna_fitness(const AntennaLayout& layout)
{
    return peak_sidelobe_level(layout) + infeasibility_penalty * constraint_violations(layout);
}

FmParams FmParams::from(const Eigen::VectorXd& v)
{
    if (v.size() != 6)
        throw ArgumentError("FM parameter vector needs 6 entries");
    FmParams params;
    for (int i = 0; i < 6; ++i)
        params.p[i] = v[i];
    return params;
}

double fm_wave(const FmParams& params, int t, bool nested)
{
    const auto& p = params.p;
    const double arg = t * FmParams::theta;
    if (nested)
        return p[0] * std::sin(p[1] * arg + p[2] * std::sin(p[3] * arg + p[4] * std::sin(p[5] * arg)));
    return p[0] * std::sin(p[1] * arg) + p[2] * std::sin(p[3] * arg) + p[4] * std::sin(p[5] * arg);
}

double fm_fitness(const FmParams& params, bool nested)
{
    const FmParams target = FmParams::target();
    double total = 0.0;
    for (int t = 0; t <= 100; ++t) {
        const double r = fm_wave(params, t, nested) - fm_wave(target, t, nested);
        total += r * r;
    }
    return total;
}

Problem make_antenna_problem()
{
    Problem p;
    p.name = "antenna";
    p.lower = Eigen::VectorXd::Zero(4);
    p.upper = Eigen::VectorXd::Constant(4, AntennaLayout::fixed_element);
    p.shift = Eigen::VectorXd::Zero(4);
    p.evaluator = [](const Eigen::VectorXd& x, Rng&) { return antenna_fitness(AntennaLayout::from(x)); };
    return p;
}

Problem make_fm_problem(bool nested)
{
    Problem p;
    p.name = "fm";
    p.lower = Eigen::VectorXd::Constant(6, FmParams::lower);
    p.upper = Eigen::VectorXd::Constant(6, FmParams::upper);
    p.shift = Eigen::VectorXd::Zero(6);
    p.known_optimum = 0.0;
    Eigen::VectorXd target(6);
    for (int i = 0; i < 6; ++i)
        target[i] = FmParams::target().p[i];
    p.optimum_position = target;
    p.evaluator = [nested](const Eigen::VectorXd& x, Rng&) { return fm_fitness(FmParams::from(x), nested); };
    return p;
}

}  // namespace fdo::apps
