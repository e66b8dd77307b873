#ifndef FDO_PROBLEMS_HPP
#define FDO_PROBLEMS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "fdo/problem.hpp"
#include "fdo/stochastic.hpp"

namespace fdo {

/// Location of the per-coordinate Schwefel 2.26 minimum and its value.
inline constexpr double schwefel_argmin = 420.9687463599820;
inline constexpr double schwefel_min_per_dim = -418.98288727243371;

/// Table box and optimum relocation for TF1..TF13.
struct ClassicalSpec {
    double lower;
    double upper;
    double shift;  ///< effective per-coordinate shift after projection into the box
    double printed_shift;  ///< shift as listed in the benchmark table
};

/// Returns the box and shift of TF1..TF13. Throws ArgumentError for other ids.
ClassicalSpec classical_spec(int tf);

/// TF1..TF7 evaluated on z = x - shift. TF7 adds uniform [0, 1) noise drawn from rng.
double eval_unimodal(int tf, const Eigen::VectorXd& x, Rng& rng);

/// TF8..TF13 evaluated on z = x - shift.
double eval_multimodal(int tf, const Eigen::VectorXd& x);

enum class ComponentKind { sphere, griewank, ackley, rastrigin, weierstrass };

/// Parameters of one Gaussian-weighted composition of ten component functions.
struct CompositeSpec {
    static constexpr std::size_t components = 10;
    static constexpr double scale_c = 2000.0;  ///< target magnitude of a normalized component at the probe
    static constexpr double probe = 5.0;  ///< per-coordinate probe used to normalize each component
    static constexpr double lower = -5.0;
    static constexpr double upper = 5.0;

    std::array<ComponentKind, components> kinds;
    std::array<double, components> sigma;
    std::array<double, components> lambda;
    std::array<double, components> bias;
    std::vector<Eigen::VectorXd> optima;  ///< one per component, inside [-5, 5]^n
    std::array<double, components> fmax;  ///< |f_i(probe / lambda_i)| used for normalization
};

/// Seed from which the component optima of composite `cf` are drawn.
std::uint64_t composite_seed(int cf);

/// Builds the composite spec for TF14..TF19 at dimension n.
CompositeSpec make_composite_spec(int cf, Eigen::Index n);

/// Normalized mixing weights at x; they sum to 1.
Eigen::VectorXd composite_weights(const CompositeSpec& spec, const Eigen::VectorXd& x);

double eval_composite(const CompositeSpec& spec, const Eigen::VectorXd& x);

/// TF14..TF19; x must lie in [-5, 5]^n.
double eval_composite(int cf, const Eigen::VectorXd& x);

/// CEC04..CEC10 base functions, unshifted and unrotated, offset so the minimum is 1.
/// x must lie in [-100, 100]^n.
double eval_cec_base(int f, const Eigen::VectorXd& x);

struct ProblemOptions {
    std::optional<Eigen::Index> dimension;  ///< overrides the table dimension for scalable problems
    bool fm_nested = false;  ///< nested-modulation reading of the FM objective
    /// Apply the table shift to TF1..TF13. When false their optimum sits at the kernel's own optimum.
    bool relocate_optimum = true;
};

/// One registry entry, as printed by `list`.
struct ProblemInfo {
    std::string name;
    std::string family;
    Eigen::Index default_dimension;
    bool scalable;
    double lower;
    double upper;
    std::optional<double> f_min;
};

/// All registered problem names with their table metadata.
const std::vector<ProblemInfo>& problem_registry();

/// Looks up a problem by name (tf1..tf19, cec04..cec10, antenna, fm).
/// Throws ArgumentError for unknown names or unsupported dimensions.
Problem make_problem(std::string_view name, const ProblemOptions& options = {});

}  // namespace fdo

#endif  // FDO_PROBLEMS_HPP
