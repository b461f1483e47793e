#include <gtest/gtest.h>

#include <set>

#include "ddw/dataset.hpp"
#include "ddw/error.hpp"

namespace {

ddw::Cycle cycle(std::int64_t id, std::vector<std::vector<double>> channels) {
    ddw::Cycle c;
    c.id = id;
    for (auto& ch : channels) c.channels.emplace_back(std::move(ch));
    return c;
}

ddw::ReferenceDataset lengths_dataset(std::initializer_list<std::size_t> lengths) {
    std::vector<ddw::Cycle> cycles;
    std::int64_t id = 0;
    for (std::size_t l : lengths) cycles.push_back(cycle(id++, {std::vector<double>(l, 0.0)}));
    return ddw::ReferenceDataset({"x"}, cycles);
}

// Two channels, lengths 4..6, modal length 5.
ddw::ReferenceDataset gait_like() {
    std::vector<ddw::Cycle> cycles;
    const std::size_t lengths[] = {5, 4, 5, 6, 5, 4};
    for (std::size_t n = 0; n < 6; ++n) {
        std::vector<double> a(lengths[n]), b(lengths[n]);
        for (std::size_t i = 0; i < lengths[n]; ++i) {
            a[i] = static_cast<double>(i) + 0.5 * static_cast<double>(n % 3);
            b[i] = -10.0 + static_cast<double>((i * 7 + n) % 5);
        }
        cycles.push_back(cycle(static_cast<std::int64_t>(n), {a, b}));
    }
    return ddw::ReferenceDataset({"a", "b"}, cycles);
}

}  // namespace

TEST(ReferenceDataset, ValidatesShape) {
    EXPECT_THROW(ddw::ReferenceDataset({"x"}, {}), ddw::ValidationError);
    EXPECT_THROW(ddw::ReferenceDataset({"x", "y"}, {cycle(7, {{1, 2, 3}, {1, 2}})}), ddw::ValidationError);
    EXPECT_THROW(ddw::ReferenceDataset({"x", "y"}, {cycle(0, {{1, 2}})}), ddw::ValidationError);
    EXPECT_THROW(ddw::ReferenceDataset({"x", "x"}, {cycle(0, {{1}, {2}})}), ddw::ValidationError);
    try {
        ddw::ReferenceDataset({"x", "y"}, {cycle(7, {{1, 2, 3}, {1, 2}})});
    } catch (const ddw::ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("cycle 7"), std::string::npos);
    }
}

TEST(ReferenceDataset, DimRangeAndChannelIndex) {
    const auto d = lengths_dataset({3, 4});
    EXPECT_EQ(d.dim_range(), (ddw::DimRange{3, 4}));
    EXPECT_EQ(gait_like().channel_index("b"), 1u);
    EXPECT_THROW(gait_like().channel_index("zz"), ddw::InvalidInput);
}

TEST(ModalDimension, Examples) {
    auto m = ddw::modal_dimension(lengths_dataset({59, 60, 60, 61}));
    EXPECT_EQ(m.length, 60u);
    EXPECT_EQ(m.count, 2u);
    m = ddw::modal_dimension(lengths_dataset({59, 59, 60, 60}));
    EXPECT_EQ(m.length, 59u);
    EXPECT_EQ(m.count, 2u);
    m = ddw::modal_dimension(lengths_dataset({42}));
    EXPECT_EQ(m.length, 42u);
    EXPECT_EQ(m.count, 1u);
}

TEST(AverageReference, Examples) {
    EXPECT_EQ(ddw::average_reference(ddw::ReferenceDataset({"x"}, {cycle(0, {{0, 2}}), cycle(1, {{2, 4}})}), 0),
              (ddw::Series{1, 3}));
    EXPECT_EQ(ddw::average_reference(ddw::ReferenceDataset({"x"}, {cycle(0, {{0.25, -7}})}), "x"),
              (ddw::Series{0.25, -7}));
    const ddw::ReferenceDataset d({"x"}, {cycle(0, {{0, 0}}), cycle(1, {{0, 0}}), cycle(2, {{5, 5, 5}})});
    EXPECT_EQ(ddw::average_reference(d, 0), (ddw::Series{0, 0}));
}

TEST(AverageReference, InsideModalEnvelope) {
    const auto d = gait_like();
    const auto bounds = ddw::channel_bounds(d);
    for (std::size_t c = 0; c < 2; ++c) {
        const ddw::Series avg = ddw::average_reference(d, c);
        ASSERT_EQ(avg.size(), 5u);
        ASSERT_EQ(bounds[c].env_min.size(), 5u);
        for (std::size_t i = 0; i < 5; ++i) {
            EXPECT_GE(avg[i], bounds[c].env_min[i]);
            EXPECT_LE(avg[i], bounds[c].env_max[i]);
            EXPECT_LE(bounds[c].global_min, bounds[c].env_min[i]);
            EXPECT_GE(bounds[c].global_max, bounds[c].env_max[i]);
        }
    }
}

TEST(ResizeSeries, RandomShrinkDeletesOneElement) {
    const ddw::Series s{0, 2, 4};
    std::set<std::vector<double>> seen;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        ddw::Rng rng(seed);
        seen.insert(ddw::resize_series(s, 2, {1, 5}, ddw::ResizeMode::random, {}, rng).vector());
    }
    EXPECT_EQ(seen, (std::set<std::vector<double>>{{2, 4}, {0, 4}, {0, 2}}));
}

TEST(ResizeSeries, GrowInsertsMidpoint) {
    ddw::Rng rng(1);
    EXPECT_EQ(ddw::resize_series(ddw::Series{0, 2}, 3, {1, 5}, ddw::ResizeMode::random, {}, rng),
              (ddw::Series{0, 1, 2}));
}

TEST(ResizeSeries, WorstModeDeletesMaxQuality) {
    ddw::Rng rng(1);
    const std::vector<double> q{0, 9, 0};
    EXPECT_EQ(ddw::resize_series(ddw::Series{0, 2, 4}, 2, {1, 5}, ddw::ResizeMode::worst, q, rng),
              (ddw::Series{0, 4}));
}

TEST(ResizeSeries, WorstModeGrowsNextToWorst) {
    ddw::Rng rng(1);
    const std::vector<double> q{0, 1, 9, 5};
    // Worst is index 2; its worse neighbour is index 3.
    EXPECT_EQ(ddw::resize_series(ddw::Series{0, 2, 4, 8}, 5, {1, 9}, ddw::ResizeMode::worst, q, rng),
              (ddw::Series{0, 2, 4, 6, 8}));
}

TEST(ResizeSeries, Errors) {
    ddw::Rng rng(1);
    EXPECT_THROW(ddw::resize_series(ddw::Series{0, 2}, 6, {1, 5}, ddw::ResizeMode::random, {}, rng), ddw::InvalidInput);
    const std::vector<double> short_q{1.0};
    EXPECT_THROW(ddw::resize_series(ddw::Series{0, 2}, 3, {1, 5}, ddw::ResizeMode::worst, short_q, rng),
                 ddw::InvalidInput);
}

TEST(ResizeSeriesProperty, LengthExactAndValuesFromHull) {
    ddw::Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> xs(ddw::uniform_index(rng, 1, 12));
        for (double& x : xs) x = 10.0 * ddw::uniform01(rng);
        std::vector<double> q(xs.size());
        for (double& x : q) x = ddw::uniform01(rng);
        const std::size_t target = ddw::uniform_index(rng, 1, 15);
        const auto mode = trial % 2 ? ddw::ResizeMode::worst : ddw::ResizeMode::random;
        const ddw::Series out = ddw::resize_series(ddw::Series(xs), target, {1, 15}, mode, q, rng);
        ASSERT_EQ(out.size(), target);
        const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
        for (double v : out) {
            EXPECT_GE(v, *lo);
            EXPECT_LE(v, *hi);
        }
        if (target <= xs.size()) {
            // Pure deletions keep the survivors in order.
            std::size_t k = 0;
            for (double v : xs)
                if (k < out.size() && out[k] == v) ++k;
            EXPECT_EQ(k, out.size());
        }
    }
}

TEST(InitPopulation, RejectsTinyPopulation) {
    EXPECT_THROW(ddw::init_population(gait_like(), 3, 0), ddw::ConfigError);
}

TEST(InitPopulation, ZeroWidthEnvelopeGivesAverage) {
    const ddw::ReferenceDataset d({"x", "y"}, {cycle(0, {{1, 2, 3}, {4, 4, 4}}), cycle(1, {{1, 2, 3}, {4, 4, 4}})});
    for (const auto& ind : ddw::init_population(d, 6, 3)) {
        EXPECT_EQ(ind.series("x"), (ddw::Series{1, 2, 3}));
        EXPECT_EQ(ind.series("y"), (ddw::Series{4, 4, 4}));
    }
}

TEST(InitPopulation, InvariantsAndDeterminism) {
    const auto d = gait_like();
    const auto bounds = ddw::channel_bounds(d);
    const auto pop = ddw::init_population(d, 40, 21);
    ASSERT_EQ(pop.size(), 40u);
    std::set<std::size_t> lengths;
    for (std::size_t k = 0; k < pop.size(); ++k) {
        EXPECT_EQ(pop[k].birth, k);
        EXPECT_FALSE(pop[k].evaluated());
        ASSERT_EQ(pop[k].channel_count(), 2u);
        for (std::size_t c = 0; c < 2; ++c) {
            EXPECT_EQ(pop[k].channels[c].name, d.channel_names()[c]);
            const ddw::Series& s = pop[k].series(c);
            lengths.insert(s.size());
            EXPECT_TRUE(d.dim_range().contains(s.size()));
            for (double v : s) {
                EXPECT_GE(v, bounds[c].global_min);
                EXPECT_LE(v, bounds[c].global_max);
            }
        }
    }
    EXPECT_EQ(lengths, (std::set<std::size_t>{4, 5, 6}));

    const auto again = ddw::init_population(d, 40, 21);
    for (std::size_t k = 0; k < pop.size(); ++k) EXPECT_TRUE(pop[k].same_values(again[k]));
    const auto other = ddw::init_population(d, 40, 22);
    EXPECT_FALSE(pop[0].same_values(other[0]));
}
