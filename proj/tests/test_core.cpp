#include <doctest.h>

#include <cmath>

#include "fdo/core.hpp"
#include "fdo/problems.hpp"

using namespace fdo;

namespace {

Problem sphere_1d(double lo = -10.0, double hi = 10.0)
{
    Problem p;
    p.name = "sphere1";
    p.lower = Eigen::VectorXd::Constant(1, lo);
    p.upper = Eigen::VectorXd::Constant(1, hi);
    p.shift = Eigen::VectorXd::Zero(1);
    p.known_optimum = 0.0;
    p.evaluator = [](const Eigen::VectorXd& x, Rng&) { return x.squaredNorm(); };
    return p;
}

Eigen::VectorXd vec(std::initializer_list<double> v)
{
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v)
        out[i++] = x;
    return out;
}

}  // namespace

TEST_CASE("fitness weight examples")
{
    CHECK(fitness_weight(5, 10, 0, Direction::minimize) == 0.5);
    CHECK(fitness_weight(5, 10, 1, Direction::minimize) == -0.5);
    CHECK(fitness_weight(7, 0, 0, Direction::minimize) == 0.0);
    CHECK(fitness_weight(0, 7, 0, Direction::minimize) == 0.0);
}

TEST_CASE("fitness weight when maximizing inverts the ratio")
{
    CHECK(fitness_weight(10, 5, 0, Direction::maximize) == 0.5);
    CHECK(fitness_weight(0, 5, 0, Direction::maximize) == 0.0);
    CHECK(fitness_weight(-10, 5, 1, Direction::maximize) == -0.5);
}

TEST_CASE("pace examples")
{
    CHECK(pace(vec({2}), vec({1}), 0.5, vec({0.3})) == vec({0.5}));
    CHECK(pace(vec({2}), vec({1}), 0.5, vec({-0.3})) == vec({-0.5}));
    CHECK(pace(vec({2}), vec({1}), 1.0, vec({0.25})) == vec({0.5}));
    CHECK(pace(vec({4, -2}), vec({0, 0}), 0.0, vec({0.5, -0.5})) == vec({2, 1}));
    CHECK_THROWS_AS(pace(vec({1, 2}), vec({1}), 0.5, vec({0.1, 0.1})), ArgumentError);
}

TEST_CASE("fw routing: directed paces are collinear with x - x*, others bounded by |x|")
{
    Rng rng(123);
    for (int trial = 0; trial < 2000; ++trial) {
        const Eigen::VectorXd x = Eigen::VectorXd::NullaryExpr(4, [&] { return rng.uniform(-5, 5); });
        const Eigen::VectorXd best = Eigen::VectorXd::NullaryExpr(4, [&] { return rng.uniform(-5, 5); });
        const double fw = rng.uniform(-1.5, 2.0);
        const Eigen::VectorXd r = levy_r(rng, 4);
        const Eigen::VectorXd p = pace(x, best, fw, r);
        for (Eigen::Index d = 0; d < 4; ++d) {
            if (directed_weight(fw)) {
                REQUIRE(std::abs(p[d]) == doctest::Approx(std::abs((x[d] - best[d]) * fw)));
            } else if (x[d] != 0.0) {
                REQUIRE(std::abs(p[d] / x[d]) <= 1.0);
            }
        }
    }
}

TEST_CASE("agent at the optimum with a worsening pace and no saved pace stays put")
{
    const Problem p = sphere_1d();
    Rng rng(1);
    Agent a{vec({0}), 0.0, std::nullopt};
    const StepOutcome out = attempt_moves(a, vec({0.5}), p, Direction::minimize, rng);
    CHECK(out.kind == MoveKind::stayed);
    CHECK(out.agent.position == a.position);
    CHECK(out.agent.fitness == 0.0);
    CHECK_FALSE(out.agent.last_pace.has_value());
    CHECK(out.evaluations == 1);
}

TEST_CASE("previous pace fallback accepts a downhill saved pace")
{
    // x = 3 (f = 9); fresh pace +1 goes to 4 (f = 16, rejected); saved pace -1 goes to 2 (f = 4)
    const Problem p = sphere_1d();
    Rng rng(1);
    Agent a{vec({3}), 9.0, vec({-1})};
    const StepOutcome out = attempt_moves(a, vec({1}), p, Direction::minimize, rng);
    CHECK(out.kind == MoveKind::previous_pace);
    CHECK(out.agent.position == vec({2}));
    CHECK(out.agent.fitness == 4.0);
    CHECK(out.agent.fitness < a.fitness);
    CHECK(*out.agent.last_pace == vec({-1}));
    CHECK(out.evaluations == 2);
}

TEST_CASE("an accepted fresh pace is saved, clamped to the box")
{
    const Problem p = sphere_1d(-10, 10);
    Rng rng(1);
    Agent a{vec({9}), 81.0, std::nullopt};
    const StepOutcome out = attempt_moves(a, vec({-4}), p, Direction::minimize, rng);
    CHECK(out.kind == MoveKind::fresh_pace);
    CHECK(*out.agent.last_pace == vec({-4}));

    Agent b{vec({-9.5}), 90.25, std::nullopt};
    const Problem q = sphere_1d(-10, -1);
    const StepOutcome clamped = attempt_moves(b, vec({20}), q, Direction::minimize, rng);
    CHECK(clamped.agent.position == vec({-1}));
    CHECK(*clamped.agent.last_pace == vec({8.5}));
}

TEST_CASE("equal fitness is not an improvement")
{
    const Problem p = sphere_1d();
    Rng rng(1);
    Agent a{vec({2}), 4.0, std::nullopt};
    const StepOutcome out = attempt_moves(a, vec({-4}), p, Direction::minimize, rng);
    CHECK(out.kind == MoveKind::stayed);
    CHECK(out.agent.position == vec({2}));
}

TEST_CASE("params validation")
{
    FdoParams params;
    CHECK_NOTHROW(params.validate());
    params.weight_factor = 2;
    CHECK_THROWS_AS(params.validate(), ArgumentError);
    params.weight_factor = 0;
    params.population_size = 0;
    CHECK_THROWS_AS(params.validate(), ArgumentError);
    params.population_size = 1;
    params.max_iterations = 0;
    CHECK_THROWS_AS(params.validate(), ArgumentError);
}

TEST_CASE("a single agent for a single iteration never worsens")
{
    FdoParams params;
    params.population_size = 1;
    params.max_iterations = 1;
    for (const char* name : {"tf1", "tf8", "tf14", "cec06", "antenna"}) {
        const Problem p = make_problem(name);
        Rng rng(5);
        const double initial = initialize_swarm(p, params, rng).best.fitness;
        const RunResult r = run(p, params, 5);
        CHECK(r.best_fitness <= initial);
    }
}

TEST_CASE("same seed gives an identical record")
{
    const Problem p = make_problem("tf10");
    FdoParams params;
    params.max_iterations = 60;
    RunOptions options;
    options.record_positions = true;
    const RunResult a = run(p, params, 17, options);
    const RunResult b = run(p, params, 17, options);
    CHECK(identical(a.record, b.record));
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.record.size() == 60);
    const RunResult c = run(p, params, 18, options);
    CHECK_FALSE(identical(a.record, c.record));
}

TEST_CASE("run invariants hold along the trajectory")
{
    for (const char* name : {"tf1", "tf5", "tf7", "tf8", "tf12", "tf16", "cec07", "fm"}) {
        CAPTURE(name);
        const Problem p = make_problem(name);
        FdoParams params;
        params.population_size = 12;
        params.max_iterations = 40;
        std::vector<double> best_seen;
        int violations = 0;
        RunOptions options;
        options.on_step = [&](const StepEvent& e) {
            const Agent& after = e.outcome.agent;
            if (!p.contains(after.position))
                ++violations;
            if (after.fitness > e.before.fitness)
                ++violations;
            const bool pace_changed = after.last_pace.has_value() != e.before.last_pace.has_value() ||
                                      (after.last_pace && *after.last_pace != *e.before.last_pace);
            if (pace_changed && !(after.fitness < e.before.fitness))
                ++violations;
            if (e.outcome.evaluations > 2)
                ++violations;
            if (!best_seen.empty() && e.best.fitness > best_seen.back())
                ++violations;
            best_seen.push_back(e.best.fitness);
        };
        const RunResult r = run(p, params, 3, options);
        CHECK(violations == 0);
        CHECK(r.evaluations <= static_cast<std::size_t>(2 * params.population_size * params.max_iterations));
        for (std::size_t t = 1; t < r.record.size(); ++t)
            CHECK(r.record.best_fitness[t] <= r.record.best_fitness[t - 1]);
    }
}

TEST_CASE("maximization keeps a non-decreasing best")
{
    Problem p = sphere_1d();
    p.direction = Direction::maximize;
    p.known_optimum.reset();
    FdoParams params;
    params.direction = Direction::maximize;
    params.population_size = 5;
    params.max_iterations = 30;
    const RunResult r = run(p, params, 2);
    for (std::size_t t = 1; t < r.record.size(); ++t)
        CHECK(r.record.best_fitness[t] >= r.record.best_fitness[t - 1]);
    CHECK(r.best_fitness > 50.0);

    FdoParams wrong;
    CHECK_THROWS_AS(run(p, wrong, 2), ArgumentError);
}
