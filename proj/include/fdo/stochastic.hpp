#ifndef FDO_STOCHASTIC_HPP
#define FDO_STOCHASTIC_HPP

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace fdo {

/// Seeded random source. Every stochastic choice of a replication (initial
/// positions, the directional numbers r, TF7 noise, PSO coefficients) is drawn
/// from one handle, so the seed alone fixes a run.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The real-valued conversions below are implemented here instead of
/// through the <random> distributions, whose algorithms are left to the
/// library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    Rng(const Rng&) = delete;
    Rng& operator=(const Rng&) = delete;
    Rng(Rng&&) noexcept = default;
    Rng& operator=(Rng&&) noexcept = default;

    std::uint64_t seed() const { return seed_; }

    /// Uniform in [0, 1), 53 random mantissa bits.
    double canonical() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi); returns lo when lo == hi. Throws std::invalid_argument when lo > hi.
    double uniform(double lo, double hi);

    /// Standard normal deviate (Box-Muller, one value per call).
    double normal();

    /// Fills a vector with independent uniform draws inside per-coordinate bounds.
    Eigen::VectorXd uniform(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct LevyParams {
    double beta = 1.5;  ///< stability exponent of the Mantegna generator
    double scale = 2.0;  ///< divisor applied before clamping into [-1, 1]
};

/// Mantegna's sigma_u for a given stability exponent.
double mantegna_sigma(double beta);

/// Raw Mantegna Levy step u / |v|^(1/beta), unbounded and heavy tailed.
double levy_step(Rng& rng, double beta = 1.5);

/// Directional random number in [-1, 1]: a Levy step divided by `scale` and clamped.
double levy_r(Rng& rng, const LevyParams& params = {});

/// One levy_r draw per coordinate.
Eigen::VectorXd levy_r(Rng& rng, Eigen::Index n, const LevyParams& params = {});

}  // namespace fdo

#endif  // FDO_STOCHASTIC_HPP
