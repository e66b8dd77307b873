#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fdo/stochastic.hpp"

using fdo::Rng;

TEST_CASE("uniform on a degenerate interval returns the bound")
{
    Rng rng(3);
    CHECK(rng.uniform(0.0, 0.0) == 0.0);
    CHECK(rng.uniform(2.5, 2.5) == 2.5);
}

TEST_CASE("uniform rejects reversed bounds")
{
    Rng rng(3);
    CHECK_THROWS_AS(rng.uniform(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("uniform stays in the half-open interval")
{
    Rng rng(11);
    for (int i = 0; i < 100000; ++i) {
        const double v = rng.uniform(-1.0, 1.0);
        REQUIRE(v >= -1.0);
        REQUIRE(v < 1.0);
    }
    // a tiny interval where rounding could otherwise land on hi
    const double lo = 1.0;
    const double hi = std::nextafter(1.0, 2.0);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(rng.uniform(lo, hi) == lo);
}

TEST_CASE("two handles with the same seed agree on 1000 draws")
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(a.canonical() == b.canonical());
        REQUIRE(a.normal() == b.normal());
        REQUIRE(fdo::levy_r(a) == fdo::levy_r(b));
    }
}

TEST_CASE("first draws are pinned across platforms")
{
    // mt19937_64 default-seeded 10000th output is fixed by the standard
    std::mt19937_64 engine;
    engine.discard(9999);
    CHECK(engine() == 9981545732273789042ULL);

    Rng rng(5489);
    const double first = rng.canonical();
    std::mt19937_64 ref(5489);
    CHECK(first == static_cast<double>(ref() >> 11) * 0x1.0p-53);
}

TEST_CASE("levy_r lies in [-1, 1] and is sign symmetric")
{
    Rng rng(2024);
    const int n = 100000;
    double sign_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = fdo::levy_r(rng);
        REQUIRE(r >= -1.0);
        REQUIRE(r <= 1.0);
        sign_sum += (r > 0) - (r < 0);
    }
    CHECK(std::abs(sign_sum / n) < 0.02);
}

TEST_CASE("levy_r has heavier tails than a uniform draw")
{
    Rng rng(77);
    const int n = 100000;
    int tail = 0;
    int interior = 0;
    for (int i = 0; i < n; ++i) {
        const double r = std::abs(fdo::levy_r(rng));
        tail += r > 0.9;
        interior += r >= 0.45 && r < 0.55;
    }
    CHECK(tail > interior);
}

TEST_CASE("levy_r vector form draws one value per coordinate")
{
    Rng a(9);
    Rng b(9);
    const Eigen::VectorXd v = fdo::levy_r(a, 5);
    REQUIRE(v.size() == 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        CHECK(v[i] == fdo::levy_r(b));
}

TEST_CASE("Mantegna sigma at beta 1.5")
{
    // Gamma(2.5) sin(0.75 pi) / (Gamma(1.25) * 1.5 * 2^0.25), raised to 1/1.5
    const double num = std::tgamma(2.5) * std::sin(0.75 * M_PI);
    const double den = std::tgamma(1.25) * 1.5 * std::pow(2.0, 0.25);
    CHECK(fdo::mantegna_sigma(1.5) == doctest::Approx(std::pow(num / den, 1.0 / 1.5)).epsilon(1e-14));
    CHECK(fdo::mantegna_sigma(1.5) == doctest::Approx(0.6966).epsilon(1e-3));
}

TEST_CASE("vector uniform respects per-coordinate bounds")
{
    Rng rng(1);
    const Eigen::VectorXd lo = Eigen::Vector3d(-1, 0, 10);
    const Eigen::VectorXd hi = Eigen::Vector3d(1, 0, 20);
    for (int i = 0; i < 1000; ++i) {
        const Eigen::VectorXd v = rng.uniform(lo, hi);
        REQUIRE(((v.array() >= lo.array()) && (v.array() <= hi.array())).all());
        REQUIRE(v[1] == 0.0);
    }
    CHECK_THROWS_AS(rng.uniform(lo, Eigen::VectorXd::Ones(2)), std::invalid_argument);
}
