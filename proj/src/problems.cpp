#include "fdo/problems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>

#include "fdo/apps.hpp"
#include "fdo/functions.hpp"

namespace fdo {

namespace fn = functions;

namespace {

constexpr Eigen::Index table_dimension = 10;

// A printed shift is kept when it lies within 70% of the half-width around the
// box centre; otherwise it is projected onto that inner box so the relocated
// optimum stays reachable.
constexpr double shift_margin = 0.7;

struct TableRow {
    double lower;
    double upper;
    double printed_shift;
};

// TF1..TF13 as listed in the benchmark tables; TF10 has no shift.
constexpr std::array<TableRow, 13> classical_rows{{
    {-100, 100, -30},
    {-10, 10, -3},
    {-100, 100, -30},
    {-100, 100, -30},
    {-30, 30, -15},
    {-100, 100, -750},
    {-1.28, 1.28, -0.25},
    {-500, 500, -300},
    {-5.12, 5.12, -2},
    {-32, 32, 0},
    {-600, 600, -400},
    {-50, 50, -30},
    {-50, 50, -100},
}};

void require_nonempty(const Eigen::VectorXd& x, const char* what)
{
    if (x.size() == 0)
        throw ArgumentError(std::string(what) + ": empty input vector");
}

void require_box(const Eigen::VectorXd& x, double lo, double hi, const char* what)
{
    require_nonempty(x, what);
    if ((x.array() < lo).any() || (x.array() > hi).any())
        throw ArgumentError(std::string(what) + ": input outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
}

double eval_component(ComponentKind kind, const Eigen::VectorXd& z)
{
    switch (kind) {
    case ComponentKind::sphere: return fn::sphere(z);
    case ComponentKind::griewank: return fn::griewank(z);
    case ComponentKind::ackley: return fn::ackley(z);
    case ComponentKind::rastrigin: return fn::rastrigin(z);
    case ComponentKind::weierstrass: return fn::weierstrass(z);
    }
    return 0.0;
}

template <typename T>
std::array<T, 10> pairs(T a, T b, T c, T d, T e)
{
    return {a, a, b, b, c, c, d, d, e, e};
}

}  // namespace

ClassicalSpec classical_spec(int tf)
{
    if (tf < 1 || tf > 13)
        throw ArgumentError("classical_spec: TF" + std::to_string(tf) + " is not a shifted classical function");
    const TableRow& row = classical_rows[tf - 1];
    const double centre = 0.5 * (row.lower + row.upper);
    const double reach = shift_margin * 0.5 * (row.upper - row.lower);
    return {row.lower, row.upper, std::clamp(row.printed_shift, centre - reach, centre + reach), row.printed_shift};
}

namespace {

double unimodal_kernel(int tf, const Eigen::VectorXd& z, Rng& rng)
{
    switch (tf) {
    case 1: return fn::sphere(z);
    case 2: return fn::schwefel_2_22(z);
    case 3: return fn::schwefel_1_2(z);
    case 4: return fn::schwefel_2_21(z);
    case 5:
        if (z.size() < 2)
            throw ArgumentError("eval_unimodal: TF5 needs at least 2 dimensions");
        return fn::rosenbrock(z);
    case 6: return fn::step(z);
    default: return fn::quartic(z) + rng.canonical();
    }
}

double multimodal_kernel(int tf, const Eigen::VectorXd& z)
{
    switch (tf) {
    case 8: return fn::schwefel(z);
    case 9: return fn::rastrigin(z);
    case 10: return fn::ackley(z);
    case 11: return fn::griewank(z);
    case 12: return fn::penalized_1(z);
    default: return fn::penalized_2(z);
    }
}

}  // namespace

double eval_unimodal(int tf, const Eigen::VectorXd& x, Rng& rng)
{
    if (tf < 1 || tf > 7)
        throw ArgumentError("eval_unimodal: TF" + std::to_string(tf) + " is not unimodal");
    require_nonempty(x, "eval_unimodal");
    return unimodal_kernel(tf, x.array() - classical_spec(tf).shift, rng);
}

double eval_multimodal(int tf, const Eigen::VectorXd& x)
{
    if (tf < 8 || tf > 13)
        throw ArgumentError("eval_multimodal: TF" + std::to_string(tf) + " is not multimodal");
    require_nonempty(x, "eval_multimodal");
    return multimodal_kernel(tf, x.array() - classical_spec(tf).shift);
}

std::uint64_t composite_seed(int cf) { return 0xC0FFEEULL + static_cast<std::uint64_t>(cf); }

CompositeSpec make_composite_spec(int cf, Eigen::Index n)
{
    if (cf < 14 || cf > 19)
        throw ArgumentError("make_composite_spec: TF" + std::to_string(cf) + " is not a composite");
    if (n < 1)
        throw ArgumentError("make_composite_spec: dimension must be positive");
    using K = ComponentKind;
    CompositeSpec spec;
    spec.sigma.fill(1.0);
    spec.bias.fill(0.0);
    switch (cf) {
    case 14:
        spec.kinds.fill(K::sphere);
        spec.lambda.fill(5.0 / 100);
        break;
    case 15:
        spec.kinds.fill(K::griewank);
        spec.lambda.fill(5.0 / 100);
        break;
    case 16:
        spec.kinds.fill(K::griewank);
        spec.lambda.fill(1.0);
        break;
    case 17:
        spec.kinds = pairs(K::ackley, K::rastrigin, K::weierstrass, K::griewank, K::sphere);
        spec.lambda = pairs(5.0 / 32, 1.0, 5.0 / 0.5, 5.0 / 100, 5.0 / 100);
        break;
    default:
        spec.kinds = pairs(K::rastrigin, K::weierstrass, K::griewank, K::ackley, K::sphere);
        spec.lambda = pairs(1.0 / 5, 5.0 / 0.5, 5.0 / 100, 5.0 / 32, 5.0 / 100);
        if (cf == 19) {
            for (std::size_t i = 0; i < CompositeSpec::components; ++i) {
                spec.sigma[i] = 0.1 * static_cast<double>(i + 1);
                spec.lambda[i] *= spec.sigma[i];
            }
        }
        break;
    }

    Rng rng(composite_seed(cf));
    spec.optima.reserve(CompositeSpec::components);
    for (std::size_t i = 0; i < CompositeSpec::components; ++i) {
        Eigen::VectorXd o(n);
        for (Eigen::Index d = 0; d < n; ++d)
            o[d] = rng.uniform(CompositeSpec::lower, CompositeSpec::upper);
        spec.optima.push_back(std::move(o));
    }
    const Eigen::VectorXd probe = Eigen::VectorXd::Constant(n, CompositeSpec::probe);
    for (std::size_t i = 0; i < CompositeSpec::components; ++i)
        spec.fmax[i] = std::abs(eval_component(spec.kinds[i], probe / spec.lambda[i]));
    return spec;
}

Eigen::VectorXd composite_weights(const CompositeSpec& spec, const Eigen::VectorXd& x)
{
    constexpr auto m = static_cast<Eigen::Index>(CompositeSpec::components);
    const auto n = static_cast<double>(x.size());
    Eigen::VectorXd w(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double s = spec.sigma[i];
        w[i] = std::exp(-(x - spec.optima[i]).squaredNorm() / (2.0 * n * s * s));
    }
    const double top = w.maxCoeff();
    // damp every component except the closest one(s)
    const double damp = 1.0 - std::pow(top, 10);
    for (Eigen::Index i = 0; i < m; ++i)
        if (w[i] != top)
            w[i] *= damp;
    const double total = w.sum();
    if (!(total > 0.0))
        return Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
    return w / total;
}

double eval_composite(const CompositeSpec& spec, const Eigen::VectorXd& x)
{
    require_box(x, CompositeSpec::lower, CompositeSpec::upper, "eval_composite");
    if (spec.optima.empty() || spec.optima.front().size() != x.size())
        throw ArgumentError("eval_composite: dimension mismatch");
    const Eigen::VectorXd w = composite_weights(spec, x);
    double f = 0.0;
    for (std::size_t i = 0; i < CompositeSpec::components; ++i) {
        const auto idx = static_cast<Eigen::Index>(i);
        if (w[idx] == 0.0)
            continue;
        const Eigen::VectorXd z = (x - spec.optima[i]) / spec.lambda[i];
        const double normalized = CompositeSpec::scale_c * eval_component(spec.kinds[i], z) / spec.fmax[i];
        f += w[idx] * (normalized + spec.bias[i]);
    }
    return f;
}

double eval_composite(int cf, const Eigen::VectorXd& x)
{
    require_nonempty(x, "eval_composite");
    return eval_composite(make_composite_spec(cf, x.size()), x);
}

double eval_cec_base(int f, const Eigen::VectorXd& x)
{
    if (f < 4 || f > 10)
        throw ArgumentError("eval_cec_base: CEC" + std::to_string(f) + " is not an analytic base function");
    require_box(x, -100.0, 100.0, "eval_cec_base");
    double v = 0.0;
    switch (f) {
    case 4: v = fn::rastrigin(x); break;
    case 5: v = fn::griewank(x); break;
    case 6: v = fn::weierstrass(x); break;
    case 7: v = fn::modified_schwefel(x); break;
    case 8: v = fn::expanded_schaffer_f6(x); break;
    case 9: v = fn::happy_cat(x); break;
    default: v = fn::ackley(x); break;
    }
    return v + 1.0;
}

const std::vector<ProblemInfo>& problem_registry()
{
    static const std::vector<ProblemInfo> registry = [] {
        std::vector<ProblemInfo> out;
        for (int tf = 1; tf <= 19; ++tf) {
            ProblemInfo info;
            info.name = "tf" + std::to_string(tf);
            info.default_dimension = table_dimension;
            info.scalable = true;
            if (tf <= 13) {
                const ClassicalSpec s = classical_spec(tf);
                info.family = tf <= 7 ? "unimodal" : "multimodal";
                info.lower = s.lower;
                info.upper = s.upper;
                info.f_min = tf == 8 ? schwefel_min_per_dim * table_dimension : 0.0;
            } else {
                info.family = "composite";
                info.lower = CompositeSpec::lower;
                info.upper = CompositeSpec::upper;
                info.f_min = 0.0;
            }
            out.push_back(info);
        }
        for (int f = 4; f <= 10; ++f) {
            out.push_back({f < 10 ? "cec0" + std::to_string(f) : "cec10", "cec2019", table_dimension, true, -100.0,
                           100.0, 1.0});
        }
        out.push_back({"antenna", "application", 4, false, 0.0, apps::AntennaLayout::fixed_element, std::nullopt});
        out.push_back({"fm", "application", 6, false, apps::FmParams::lower, apps::FmParams::upper, 0.0});
        return out;
    }();
    return registry;
}

namespace {

std::optional<int> parse_index(std::string_view name, std::string_view prefix)
{
    if (name.substr(0, prefix.size()) != prefix)
        return std::nullopt;
    const std::string_view digits = name.substr(prefix.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        return std::nullopt;
    return value;
}

Problem boxed(std::string name, Eigen::Index n, double lo, double hi, double shift)
{
    Problem p;
    p.name = std::move(name);
    p.lower = Eigen::VectorXd::Constant(n, lo);
    p.upper = Eigen::VectorXd::Constant(n, hi);
    p.shift = Eigen::VectorXd::Constant(n, shift);
    return p;
}

Problem make_classical(int tf, Eigen::Index n, bool relocate)
{
    if (tf == 5 && n < 2)
        throw ArgumentError("tf5 needs at least 2 dimensions");
    const ClassicalSpec s = classical_spec(tf);
    const double shift = relocate ? s.shift : 0.0;
    Problem p = boxed("tf" + std::to_string(tf), n, s.lower, s.upper, shift);
    // per-coordinate optimum of each kernel in unshifted coordinates
    double z_opt = 0.0;
    if (tf == 5 || tf == 13)
        z_opt = 1.0;
    else if (tf == 8)
        z_opt = schwefel_argmin;
    else if (tf == 12)
        z_opt = -1.0;
    p.optimum_position = Eigen::VectorXd::Constant(n, shift + z_opt);
    if (tf == 8)
        p.known_optimum = schwefel_min_per_dim * static_cast<double>(n);
    else if (tf != 7)
        p.known_optimum = 0.0;
    if (tf <= 7)
        p.evaluator = [tf, shift](const Eigen::VectorXd& x, Rng& rng) {
            return unimodal_kernel(tf, x.array() - shift, rng);
        };
    else
        p.evaluator = [tf, shift](const Eigen::VectorXd& x, Rng&) { return multimodal_kernel(tf, x.array() - shift); };
    return p;
}

Problem make_composite(int cf, Eigen::Index n)
{
    auto spec = std::make_shared<const CompositeSpec>(make_composite_spec(cf, n));
    Problem p = boxed("tf" + std::to_string(cf), n, CompositeSpec::lower, CompositeSpec::upper, 0.0);
    p.shift = spec->optima.front();
    p.optimum_position = spec->optima.front();
    p.known_optimum = 0.0;
    p.evaluator = [spec](const Eigen::VectorXd& x, Rng&) { return eval_composite(*spec, x); };
    return p;
}

Problem make_cec(int f, Eigen::Index n, std::string name)
{
    Problem p = boxed(std::move(name), n, -100.0, 100.0, 0.0);
    p.known_optimum = 1.0;
    p.optimum_position = Eigen::VectorXd::Constant(n, f == 9 ? -1.0 : 0.0);
    p.evaluator = [f](const Eigen::VectorXd& x, Rng&) { return eval_cec_base(f, x); };
    return p;
}

}  // namespace

Problem make_problem(std::string_view name, const ProblemOptions& options)
{
    if (options.dimension && *options.dimension < 1)
        throw ArgumentError("dimension must be positive");
    const Eigen::Index n = options.dimension.value_or(table_dimension);

    Problem p;
    if (name == "antenna" || name == "fm") {
        const Eigen::Index fixed = name == "antenna" ? 4 : 6;
        if (options.dimension && *options.dimension != fixed)
            throw ArgumentError(std::string(name) + " has fixed dimension " + std::to_string(fixed));
        p = name == "antenna" ? apps::make_antenna_problem() : apps::make_fm_problem(options.fm_nested);
    } else if (auto tf = parse_index(name, "tf"); tf && *tf >= 1 && *tf <= 19) {
        p = *tf <= 13 ? make_classical(*tf, n, options.relocate_optimum) : make_composite(*tf, n);
    } else if (auto f = parse_index(name, "cec"); f && *f >= 4 && *f <= 10 &&
                                                 name.size() == 5) {
        p = make_cec(*f, n, std::string(name));
    } else {
        throw ArgumentError("unknown problem '" + std::string(name) + "'");
    }
    p.validate();
    return p;
}

}  // namespace fdo
