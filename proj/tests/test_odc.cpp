#include <gtest/gtest.h>

#include "ddw/error.hpp"
#include "ddw/mapping.hpp"
#include "ddw/odc.hpp"
#include "ddw/problems.hpp"
#include "oracles.hpp"

namespace {

ddw::Individual with_quality(std::vector<double> values, std::vector<double> quality, double fitness = 0.0) {
    ddw::Individual ind;
    ind.channels.push_back({"ch", ddw::Series(std::move(values))});
    ind.report = ddw::FitnessReport{fitness, {std::move(quality)}};
    return ind;
}

ddw::Individual point(std::vector<double> xs, const ddw::Objective& f, std::uint64_t birth = 0) {
    ddw::Individual ind = ddw::make_point_individual(std::move(xs), birth);
    ind.report = ddw::blackbox_fitness(ind, f);
    return ind;
}

ddw::Cycle cycle(std::int64_t id, std::vector<double> values) {
    ddw::Cycle c;
    c.id = id;
    c.channels.emplace_back(std::move(values));
    return c;
}

}  // namespace

TEST(OdcMerge, SelfMergeKeepsBase) {
    const auto base = with_quality({1, 2, 3}, {0.5, 2, 1});
    const auto out = ddw::odc_merge(base, base);
    EXPECT_TRUE(out.solution.same_values(base));
    for (const auto& ch : out.choices) EXPECT_FALSE(ch.took_other);
}

TEST(OdcMerge, PerDimensionWinner) {
    const auto out = ddw::odc_merge(with_quality({0, 5}, {0, 9}), with_quality({0, 5}, {9, 0}));
    EXPECT_EQ(out.solution.series(0), (ddw::Series{0, 5}));
    ASSERT_EQ(out.choices.size(), 2u);
    EXPECT_FALSE(out.choices[0].took_other);
    EXPECT_TRUE(out.choices[1].took_other);
    EXPECT_EQ(out.choices[1].other_index, 1u);
}

TEST(OdcMerge, AllDimensionsFromStrictlyBetterOther) {
    const std::vector<double> a{1, 1}, b{7, 7, 7};
    const auto out = ddw::odc_merge(with_quality(a, {4, 4}), with_quality(b, {0, 0, 0}));
    EXPECT_EQ(out.solution.series(0), (ddw::Series{7, 7}));
    // The matched indices must lie on a minimal warping path.
    const auto best = oracle::min_warping_cost(a, b);
    const auto route = ddw::dtw_best_route(a, b);
    EXPECT_NE(std::find(best.paths.begin(), best.paths.end(), oracle::Path(route.begin(), route.end())),
              best.paths.end());
    for (const auto& ch : out.choices) {
        EXPECT_TRUE(ch.took_other);
        EXPECT_EQ(ch.chosen_quality, 0.0);
        EXPECT_EQ(ch.rejected_quality, 4.0);
    }
}

TEST(OdcMerge, PicksLowestQualityInsideDirs) {
    // a_0 maps onto every index of b; the lowest quality there is at index 2.
    const auto out = ddw::odc_merge(with_quality({5}, {3}), with_quality({1, 2, 3}, {4, 6, 1}));
    EXPECT_EQ(out.solution.series(0), (ddw::Series{3}));
    EXPECT_EQ(out.choices[0].other_index, 2u);
}

TEST(OdcMerge, TieKeepsBase) {
    const auto out = ddw::odc_merge(with_quality({1}, {2}), with_quality({9}, {2}));
    EXPECT_EQ(out.solution.series(0), (ddw::Series{1}));
}

TEST(OdcMerge, Errors) {
    ddw::Individual bare;
    bare.channels.push_back({"ch", ddw::Series{1, 2}});
    EXPECT_THROW(ddw::odc_merge(bare, with_quality({1, 2}, {0, 0})), ddw::InvalidState);
    ddw::Individual renamed = with_quality({1, 2}, {0, 0});
    renamed.channels[0].name = "other";
    EXPECT_THROW(ddw::odc_merge(with_quality({1, 2}, {0, 0}), renamed), ddw::InvalidInput);
}

TEST(OdcCollect, SingleMemberIsUnchanged) {
    const ddw::ReferenceDataset d({"ch"}, {cycle(0, {0, 1, 2}), cycle(1, {0, 2})});
    ddw::Individual x;
    x.channels.push_back({"ch", ddw::Series{0, 1}});
    x.report = ddw::template_fitness(x, d);
    const std::vector<ddw::Individual> part_a{x};
    const auto out = ddw::odc_collect(part_a, d);
    EXPECT_TRUE(out.same_values(x));
    EXPECT_EQ(out.fitness(), x.fitness());

    const std::vector<ddw::Individual> twins{x, x};
    EXPECT_TRUE(ddw::odc_collect(twins, d).same_values(x));
}

TEST(OdcCollect, TakesStrictlyBetterDimension) {
    // Equal lengths everywhere, so alignment is elementwise. Brute force over
    // both choices per dimension finds the best merge; odc must reach it.
    const ddw::ReferenceDataset d({"ch"}, {cycle(0, {1, 2, 3}), cycle(1, {1, 2, 3})});
    ddw::Individual best, second;
    best.channels.push_back({"ch", ddw::Series{1, 2, 5}});
    second.channels.push_back({"ch", ddw::Series{4, 4, 3}});
    best.report = ddw::template_fitness(best, d);
    second.report = ddw::template_fitness(second, d);
    ASSERT_LT(best.fitness(), second.fitness());

    double brute = INFINITY;
    std::vector<double> arg;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<double> v(3);
        for (int i = 0; i < 3; ++i) v[i] = (mask >> i) & 1 ? second.series(0)[i] : best.series(0)[i];
        ddw::Individual cand;
        cand.channels.push_back({"ch", ddw::Series(v)});
        const double f = ddw::template_fitness(cand, d).fitness;
        if (f < brute) brute = f, arg = v;
    }
    const std::vector<ddw::Individual> part_a{best, second};
    const auto out = ddw::odc_collect(part_a, d);
    EXPECT_EQ(out.series(0).vector(), arg);
    EXPECT_EQ(out.fitness(), brute);
    EXPECT_EQ(out.series(0)[2], 3.0);
}

TEST(OdcCollect, KeepsBestLengthsAndRejectsBadInput) {
    const ddw::ReferenceDataset d({"ch"}, {cycle(0, {0, 1, 2, 3}), cycle(1, {0, 1, 3}), cycle(2, {0, 2, 3, 3, 4})});
    std::vector<ddw::Individual> part_a;
    for (auto v : {std::vector<double>{0, 1, 2, 3}, {0, 2, 3}, {1, 1, 2, 3, 4}}) {
        ddw::Individual x;
        x.channels.push_back({"ch", ddw::Series(v)});
        x.report = ddw::template_fitness(x, d);
        part_a.push_back(x);
    }
    std::sort(part_a.begin(), part_a.end(), [](auto& a, auto& b) { return a.fitness() < b.fitness(); });
    const auto out = ddw::odc_collect(part_a, d);
    EXPECT_EQ(out.series(0).size(), part_a[0].series(0).size());
    EXPECT_EQ(out.fitness(), ddw::template_fitness(out, d).fitness);

    EXPECT_THROW(ddw::odc_collect(std::span<const ddw::Individual>{}, d), ddw::InvalidInput);
    std::swap(part_a[0], part_a[2]);
    EXPECT_THROW(ddw::odc_collect(part_a, d), ddw::InvalidInput);
}

TEST(OdcProbe, Examples) {
    const ddw::Objective sphere = ddw::make_benchmark(1, 2).objective();
    const std::vector<ddw::Individual> alone{point({1, 1}, sphere)};
    EXPECT_TRUE(ddw::odc_probe_blackbox(alone, sphere).same_values(alone[0]));

    const std::vector<ddw::Individual> pair{point({1, 1}, sphere), point({0, 3}, sphere)};
    const auto out = ddw::odc_probe_blackbox(pair, sphere);
    EXPECT_EQ(out.series(0), (ddw::Series{0, 1}));
    EXPECT_EQ(out.fitness(), 1.0);

    ddw::Objective flat = sphere;
    flat.fn = [](std::span<const double>) { return 7.0; };
    const std::vector<ddw::Individual> flat_pair{point({1, 1}, flat), point({0, 3}, flat)};
    EXPECT_TRUE(ddw::odc_probe_blackbox(flat_pair, flat).same_values(flat_pair[0]));
}

TEST(OdcProbe, NeverWorseThanBest) {
    const ddw::Objective rastrigin = ddw::make_benchmark(9, 6).objective();
    ddw::Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ddw::Individual> part_a;
        for (int k = 0; k < 4; ++k) {
            std::vector<double> x(6);
            for (double& v : x) v = 10.24 * ddw::uniform01(rng) - 5.12;
            part_a.push_back(point(x, rastrigin));
        }
        std::sort(part_a.begin(), part_a.end(), [](auto& a, auto& b) { return a.fitness() < b.fitness(); });
        const auto out = ddw::odc_probe_blackbox(part_a, rastrigin);
        EXPECT_LE(out.fitness(), part_a[0].fitness());
        EXPECT_EQ(out.fitness(), rastrigin(out.series(0).values()));
    }
}

TEST(ClassifyOdc, ThreeClasses) {
    const ddw::Objective sphere = ddw::make_benchmark(1, 1).objective();
    const std::vector<ddw::Individual> part_a{point({1}, sphere), point({2}, sphere)};  // 1, 4
    EXPECT_EQ(ddw::classify_odc(0.5, part_a), ddw::OdcClass::best);
    EXPECT_EQ(ddw::classify_odc(2.0, part_a), ddw::OdcClass::better);
    EXPECT_EQ(ddw::classify_odc(1.0, part_a), ddw::OdcClass::better);
    EXPECT_EQ(ddw::classify_odc(4.0, part_a), ddw::OdcClass::worst);
    EXPECT_EQ(ddw::to_string(ddw::OdcClass::better), "better");
}
