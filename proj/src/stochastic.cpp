#include "fdo/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdo {

double Rng::uniform(double lo, double hi)
{
    if (lo > hi)
        throw std::invalid_argument("uniform: lower bound exceeds upper bound");
    if (lo == hi)
        return lo;
    const double v = lo + (hi - lo) * canonical();
    // lo + (hi - lo) * u can round up to hi for u close to 1
    return v < hi ? v : std::nextafter(hi, lo);
}

double Rng::normal()
{
    // 1 - canonical() lies in (0, 1], so the log is finite
    const double u1 = 1.0 - canonical();
    const double u2 = canonical();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXd Rng::uniform(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi)
{
    if (lo.size() != hi.size())
        throw std::invalid_argument("uniform: bound vectors differ in size");
    Eigen::VectorXd out(lo.size());
    for (Eigen::Index d = 0; d < lo.size(); ++d)
        out[d] = uniform(lo[d], hi[d]);
    return out;
}

double mantegna_sigma(double beta)
{
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

double levy_step(Rng& rng, double beta)
{
    const double sigma_u = mantegna_sigma(beta);
    const double u = rng.normal() * sigma_u;
    const double v = rng.normal();
    // v == 0 has probability ~2^-53; the quotient saturates to +-inf and the clamp below absorbs it
    return u / std::pow(std::abs(v), 1.0 / beta);
}

double levy_r(Rng& rng, const LevyParams& params)
{
    const double step = levy_step(rng, params.beta) / params.scale;
    if (std::isnan(step))
        return 0.0;
    return std::clamp(step, -1.0, 1.0);
}

Eigen::VectorXd levy_r(Rng& rng, Eigen::Index n, const LevyParams& params)
{
    Eigen::VectorXd r(n);
    for (Eigen::Index d = 0; d < n; ++d)
        r[d] = levy_r(rng, params);
    return r;
}

}  // namespace fdo
