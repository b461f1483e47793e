#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ddw/baselines.hpp"
#include "ddw/error.hpp"
#include "ddw/io.hpp"
#include "ddw/problems.hpp"

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

}  // namespace

TEST(Benchmarks, OptimizerReproducesKnownOptimum) {
    for (int id = 1; id <= 23; ++id) {
        const auto p = ddw::make_benchmark(id);
        ASSERT_EQ(p.optimizer.size(), p.dim) << p.name;
        double value = ddw::eval_benchmark(id, p.optimizer);
        // F7 adds deterministic noise in [0, 1); its noise-free part is 0 at the origin.
        if (id == 7) value -= ddw::quartic_noise(p.optimizer);
        EXPECT_NEAR(value, p.known_optimum, 1e-6) << p.name;
    }
}

TEST(Benchmarks, PublishedOptimumValues) {
    EXPECT_NEAR(ddw::known_optimum(14), 0.998, 1e-3);
    EXPECT_NEAR(ddw::known_optimum(16), -1.0316, 1e-3);
    EXPECT_NEAR(ddw::known_optimum(17), 0.398, 1e-3);
    EXPECT_NEAR(ddw::known_optimum(18), 3.0, 1e-12);
    EXPECT_NEAR(ddw::known_optimum(23), -10.5, 0.05);
    EXPECT_NEAR(ddw::known_optimum(8, 30), -12569.486618, 1e-5);
    EXPECT_THROW(ddw::known_optimum(24), ddw::InvalidInput);
}

TEST(Benchmarks, SimpleValues) {
    EXPECT_EQ(ddw::eval_benchmark(1, std::vector<double>(30, 0.0)), 0.0);
    EXPECT_EQ(ddw::eval_benchmark(1, std::vector<double>{1, 2}), 5.0);
    EXPECT_NEAR(ddw::eval_benchmark(14, ddw::make_benchmark(14).optimizer), 0.998, 1e-3);
    EXPECT_NEAR(ddw::eval_benchmark(16, ddw::make_benchmark(16).optimizer), -1.0316, 1e-3);
    // F2 = sum |x| + prod |x|; F3 = sum of squared prefix sums.
    EXPECT_DOUBLE_EQ(ddw::eval_benchmark(2, std::vector<double>{1, -2}), 5.0);
    EXPECT_DOUBLE_EQ(ddw::eval_benchmark(3, std::vector<double>{1, -2}), 2.0);
    EXPECT_DOUBLE_EQ(ddw::eval_benchmark(4, std::vector<double>{1, -2}), 2.0);
}

TEST(Benchmarks, ShapeAndBoxErrors) {
    EXPECT_THROW(ddw::eval_benchmark(14, std::vector<double>{0, 0, 0}), ddw::InvalidInput);
    EXPECT_THROW(ddw::eval_benchmark(1, std::vector<double>{101, 0}), ddw::InvalidInput);
    EXPECT_THROW(ddw::eval_benchmark(1, std::vector<double>{}), ddw::InvalidInput);
    EXPECT_THROW(ddw::make_benchmark(16, 5), ddw::InvalidInput);
    EXPECT_THROW(ddw::make_benchmark(0), ddw::InvalidInput);
    EXPECT_EQ(ddw::parse_benchmark_id("F17"), 17);
    EXPECT_EQ(ddw::parse_benchmark_id("3"), 3);
    EXPECT_THROW(ddw::parse_benchmark_id("F24"), ddw::InvalidInput);
    EXPECT_THROW(ddw::parse_benchmark_id("sphere"), ddw::InvalidInput);
    EXPECT_TRUE(ddw::has_fixed_dim(14));
    EXPECT_FALSE(ddw::has_fixed_dim(13));
}

TEST(Benchmarks, TotalOverTheirBoxes) {
    ddw::Rng rng(31);
    for (int id = 1; id <= 23; ++id) {
        const auto p = ddw::make_benchmark(id, ddw::has_fixed_dim(id) ? std::nullopt : std::optional<std::size_t>(7));
        for (int k = 0; k < 2000; ++k) {
            std::vector<double> x(p.dim);
            for (std::size_t j = 0; j < p.dim; ++j) {
                const double u = k < 4 ? static_cast<double>(k % 2) : ddw::uniform01(rng);
                x[j] = p.lower[j] + (p.upper[j] - p.lower[j]) * u;
            }
            const double v = ddw::eval_benchmark(id, x);
            ASSERT_TRUE(std::isfinite(v)) << p.name;
            ASSERT_GE(v, p.known_optimum - 1e-9) << p.name;
        }
    }
}

TEST(Benchmarks, QuarticNoiseIsDeterministicUniform) {
    ddw::Rng rng(2);
    double sum = 0.0;
    for (int k = 0; k < 5000; ++k) {
        std::vector<double> x{ddw::uniform01(rng), ddw::uniform01(rng)};
        const double n = ddw::quartic_noise(x);
        EXPECT_EQ(n, ddw::quartic_noise(x));
        EXPECT_GE(n, 0.0);
        EXPECT_LT(n, 1.0);
        sum += n;
    }
    EXPECT_NEAR(sum / 5000, 0.5, 0.03);
}

TEST(Pso, SphereTwoDimensions) {
    const auto sphere = ddw::make_benchmark(1, 2).objective();
    std::vector<double> finals;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        finals.push_back(ddw::run_baseline(ddw::BaselineConfig{}, sphere, seed).best_fitness());
    EXPECT_LE(median(finals), 1e-4);
}

TEST(Pso, FixedPointAtOptimum) {
    const auto sphere = ddw::make_benchmark(1, 3).objective();
    ddw::BaselineConfig c;
    c.population_size = 10;
    c.max_iterations = 30;
    const auto r = ddw::run_baseline(c, sphere, 4, [](std::size_t, ddw::Rng&) { return std::vector<double>(3, 0.0); });
    for (const auto& s : r.history) EXPECT_EQ(s.best_fitness, 0.0);
    EXPECT_EQ(r.best.series(0), (ddw::Series{0, 0, 0}));
}

TEST(Baselines, DeterministicAndMonotone) {
    const auto f = ddw::make_benchmark(10, 5).objective();
    for (auto algo : {ddw::BaselineAlgorithm::pso, ddw::BaselineAlgorithm::gwo}) {
        ddw::BaselineConfig c;
        c.algorithm = algo;
        c.population_size = 15;
        c.max_iterations = 80;
        const auto r1 = ddw::run_baseline(c, f, 9);
        const auto r2 = ddw::run_baseline(c, f, 9);
        auto j1 = ddw::record_to_json(r1), j2 = ddw::record_to_json(r2);
        j1.erase("wall_time_s");
        j2.erase("wall_time_s");
        EXPECT_EQ(j1.dump(), j2.dump());
        ASSERT_EQ(r1.history.size(), 80u);
        for (std::size_t i = 1; i < r1.history.size(); ++i)
            EXPECT_LE(r1.history[i].best_fitness, r1.history[i - 1].best_fitness);
        EXPECT_EQ(r1.best_fitness(), f(r1.best.series(0).values()));
        EXPECT_EQ(r1.mode, "blackbox");
    }
}

TEST(Gwo, SphereConverges) {
    ddw::BaselineConfig c;
    c.algorithm = ddw::BaselineAlgorithm::gwo;
    EXPECT_LT(ddw::run_baseline(c, ddw::make_benchmark(1, 10).objective(), 1).best_fitness(), 1e-10);
}

TEST(FixedTemplateProblem, LayoutAndInitializer) {
    ddw::SynthParams p;
    p.n_cycles = 6;
    p.base_length = 12;
    p.channels = {"a", "b"};
    const auto synth = ddw::synth_dataset(p);
    const auto fixed = ddw::make_fixed_template_problem(synth.dataset);
    const std::size_t len = ddw::modal_dimension(synth.dataset).length;
    EXPECT_EQ(fixed.length, len);
    EXPECT_EQ(fixed.objective.dim, 2 * len);

    ddw::Rng rng(1);
    const auto x = fixed.init(0, rng);
    ASSERT_EQ(x.size(), 2 * len);
    for (std::size_t j = 0; j < x.size(); ++j) {
        EXPECT_GE(x[j], fixed.objective.lower[j]);
        EXPECT_LE(x[j], fixed.objective.upper[j]);
    }
    const ddw::Individual decoded = fixed.decode(x);
    EXPECT_EQ(decoded.channels[1].name, "b");
    EXPECT_EQ(fixed.objective(x), ddw::template_fitness(decoded, synth.dataset).fitness);
}
