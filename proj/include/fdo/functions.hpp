#ifndef FDO_FUNCTIONS_HPP
#define FDO_FUNCTIONS_HPP

// Classical benchmark kernels on unshifted coordinates. Every kernel accepts
// any Eigen vector expression and returns its scalar type, so shifted or
// scaled inputs can be passed without materializing a temporary.

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Core>

namespace fdo::functions {

template <typename Derived>
using scalar_t = typename Derived::Scalar;

template <typename Derived>
scalar_t<Derived> sphere(const Eigen::MatrixBase<Derived>& x)
{
    return x.squaredNorm();
}

/// Schwefel 2.22: sum |x_i| + prod |x_i|.
template <typename Derived>
scalar_t<Derived> schwefel_2_22(const Eigen::MatrixBase<Derived>& x)
{
    const auto a = x.derived().array().abs();
    return a.sum() + a.prod();
}

/// Schwefel 1.2: sum over prefixes of the squared prefix sum.
template <typename Derived>
scalar_t<Derived> schwefel_1_2(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    S total{0};
    S prefix{0};
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        prefix += x[i];
        total += prefix * prefix;
    }
    return total;
}

/// Schwefel 2.21: max |x_i|.
template <typename Derived>
scalar_t<Derived> schwefel_2_21(const Eigen::MatrixBase<Derived>& x)
{
    return x.derived().array().abs().maxCoeff();
}

template <typename Derived>
scalar_t<Derived> rosenbrock(const Eigen::MatrixBase<Derived>& x)
{
    const Eigen::Index n = x.size();
    if (n < 2)
        return scalar_t<Derived>(0);
    const auto head = x.head(n - 1).array();
    const auto tail = x.tail(n - 1).array();
    return (100 * (tail - head.square()).square() + (head - 1).square()).sum();
}

/// Step function: sum floor(x_i + 0.5)^2, zero on [-0.5, 0.5)^n.
template <typename Derived>
scalar_t<Derived> step(const Eigen::MatrixBase<Derived>& x)
{
    return (x.derived().array() + 0.5).floor().square().sum();
}

/// Quartic without the noise term: sum i * x_i^4 with i starting at 1.
template <typename Derived>
scalar_t<Derived> quartic(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    S total{0};
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const S sq = x[i] * x[i];
        total += static_cast<S>(i + 1) * sq * sq;
    }
    return total;
}

/// Schwefel 2.26: sum -x_i sin(sqrt|x_i|); per-coordinate minimum near x_i = 420.9687.
template <typename Derived>
scalar_t<Derived> schwefel(const Eigen::MatrixBase<Derived>& x)
{
    const auto a = x.derived().array();
    return -(a * a.abs().sqrt().sin()).sum();
}

template <typename Derived>
scalar_t<Derived> rastrigin(const Eigen::MatrixBase<Derived>& x)
{
    const auto a = x.derived().array();
    return (a.square() - 10 * (2 * std::numbers::pi * a).cos() + 10).sum();
}

template <typename Derived>
scalar_t<Derived> ackley(const Eigen::MatrixBase<Derived>& x)
{
    using std::exp;
    using std::sqrt;
    const auto n = static_cast<scalar_t<Derived>>(x.size());
    const auto a = x.derived().array();
    const auto sum_sq = a.square().sum();
    const auto sum_cos = (2 * std::numbers::pi * a).cos().sum();
    return -20 * exp(-0.2 * sqrt(sum_sq / n)) - exp(sum_cos / n) + 20 + std::numbers::e;
}

template <typename Derived>
scalar_t<Derived> griewank(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    using std::cos;
    using std::sqrt;
    S prod{1};
    for (Eigen::Index i = 0; i < x.size(); ++i)
        prod *= cos(x[i] / sqrt(static_cast<S>(i + 1)));
    return x.squaredNorm() / 4000 - prod + 1;
}

/// Boundary penalty u(x, a, k, m) used by the penalized functions.
template <typename S>
S penalty_u(S x, S a, S k, int m)
{
    if (x > a)
        return k * std::pow(x - a, m);
    if (x < -a)
        return k * std::pow(-x - a, m);
    return S(0);
}

/// Generalized penalized function 1; minimum 0 at x = (-1, ..., -1).
template <typename Derived>
scalar_t<Derived> penalized_1(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    using std::sin;
    constexpr S pi = std::numbers::pi_v<S>;
    const Eigen::Index n = x.size();
    auto y = [&](Eigen::Index i) { return 1 + (x[i] + 1) / 4; };
    const S s1 = sin(pi * y(0));
    S body = 10 * s1 * s1;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const S s = sin(pi * y(i + 1));
        body += (y(i) - 1) * (y(i) - 1) * (1 + 10 * s * s);
    }
    body += (y(n - 1) - 1) * (y(n - 1) - 1);
    S pen{0};
    for (Eigen::Index i = 0; i < n; ++i)
        pen += penalty_u<S>(x[i], 10, 100, 4);
    return pi / static_cast<S>(n) * body + pen;
}

/// Generalized penalized function 2; minimum 0 at x = (1, ..., 1).
template <typename Derived>
scalar_t<Derived> penalized_2(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    using std::sin;
    constexpr S pi = std::numbers::pi_v<S>;
    const Eigen::Index n = x.size();
    const S s0 = sin(3 * pi * x[0]);
    S body = s0 * s0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const S s = sin(3 * pi * x[i + 1]);
        body += (x[i] - 1) * (x[i] - 1) * (1 + s * s);
    }
    const S sl = sin(2 * pi * x[n - 1]);
    body += (x[n - 1] - 1) * (x[n - 1] - 1) * (1 + sl * sl);
    S pen{0};
    for (Eigen::Index i = 0; i < n; ++i)
        pen += penalty_u<S>(x[i], 5, 100, 4);
    return S(0.1) * body + pen;
}

/// Weierstrass with a = 0.5, b = 3, k_max = 20; minimum 0 at the origin.
template <typename Derived>
scalar_t<Derived> weierstrass(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    using std::cos;
    constexpr int k_max = 20;
    constexpr S a = 0.5;
    constexpr S b = 3.0;
    constexpr S two_pi = 2 * std::numbers::pi_v<S>;
    S total{0};
    S offset{0};
    S ak{1};
    S bk{1};
    for (int k = 0; k <= k_max; ++k) {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            total += ak * cos(two_pi * bk * (x[i] + S(0.5)));
        offset += ak * cos(two_pi * bk * S(0.5));
        ak *= a;
        bk *= b;
    }
    return total - static_cast<S>(x.size()) * offset;
}

/// Modified Schwefel in the form used by the 100-digit challenge suite; minimum near 0 at the origin.
template <typename Derived>
scalar_t<Derived> modified_schwefel(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    using std::abs;
    using std::fmod;
    using std::sin;
    using std::sqrt;
    constexpr S opt = 4.209687462275036e+002;
    constexpr S per_dim = 4.189828872724338e+002;
    const auto n = static_cast<S>(x.size());
    S f{0};
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const S z = x[i] + opt;
        if (z > 500) {
            const S m = 500 - fmod(z, S(500));
            f -= m * sin(sqrt(m));
            const S t = (z - 500) / 100;
            f += t * t / n;
        } else if (z < -500) {
            const S m = fmod(abs(z), S(500));
            f -= (-500 + m) * sin(sqrt(500 - m));
            const S t = (z + 500) / 100;
            f += t * t / n;
        } else {
            f -= z * sin(sqrt(abs(z)));
        }
    }
    return f + per_dim * n;
}

/// Expanded Schaffer F6 over cyclically adjacent pairs; minimum 0 at the origin.
template <typename Derived>
scalar_t<Derived> expanded_schaffer_f6(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    using std::sin;
    using std::sqrt;
    const Eigen::Index n = x.size();
    auto g = [](S u, S v) {
        const S r2 = u * u + v * v;
        const S s = sin(sqrt(r2));
        const S d = 1 + S(0.001) * r2;
        return S(0.5) + (s * s - S(0.5)) / (d * d);
    };
    S f{0};
    for (Eigen::Index i = 0; i < n; ++i)
        f += g(x[i], x[(i + 1) % n]);
    return f;
}

/// Happy Cat with alpha = 1/8; minimum 0 at x = (-1, ..., -1).
template <typename Derived>
scalar_t<Derived> happy_cat(const Eigen::MatrixBase<Derived>& x)
{
    using S = scalar_t<Derived>;
    using std::abs;
    using std::pow;
    const auto n = static_cast<S>(x.size());
    const S r2 = x.squaredNorm();
    const S sum = x.sum();
    return pow(abs(r2 - n), S(0.25)) + (S(0.5) * r2 + sum) / n + S(0.5);
}

}  // namespace fdo::functions

#endif  // FDO_FUNCTIONS_HPP
