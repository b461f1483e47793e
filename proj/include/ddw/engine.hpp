#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddw/dataset.hpp"
#include "ddw/fitness.hpp"
#include "ddw/individual.hpp"
#include "ddw/odc.hpp"
#include "ddw/strategies.hpp"

namespace ddw {

struct EngineConfig {
    std::size_t population_size = 50;
    std::size_t max_iterations = 500;
    double a_frac = 0.05;
    double b_frac = 0.45;
    double c_frac = 0.50;
    LevyParams levy;
    std::uint64_t seed = 0;
    std::optional<double> target_fitness;  // stop once the best reaches it
    int threads = 0;                       // 0: OpenMP default; never affects results
};

/// Throws ConfigError unless M >= 4, max_iterations >= 1, the fractions are
/// nonnegative and sum to 1, and lambda is valid.
void validate(const EngineConfig& config);

struct PartitionSizes {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    friend bool operator==(const PartitionSizes&, const PartitionSizes&) = default;
};

/// |A| = max(1, floor(a_frac*M)), |B| = floor(b_frac*M), |C| = the rest.
PartitionSizes partition_sizes(std::size_t population_size, const EngineConfig& config);

struct Partition {
    std::span<const Individual> a;
    std::span<const Individual> b;
    std::span<const Individual> c;
};

/// Splits a population already sorted ascending by fitness.
Partition partition(std::span<const Individual> sorted, const EngineConfig& config);

/// Ascending fitness, ties by earlier birth. All members must be evaluated.
void sort_population(std::vector<Individual>& population);

/// Next population: the (M - |A|) lowest of current + B/C newborns + d_best,
/// followed by every Part A newborn. Throws InvalidState if the pool is too
/// small.
std::vector<Individual> select_next(std::span<const Individual> current, std::span<const Individual> newborns_a,
                                    std::span<const Individual> newborns_bc, const Individual& d_best,
                                    const EngineConfig& config);

struct IterationStats {
    std::size_t iteration = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double std_fitness = 0.0;
    std::optional<OdcClass> odc;  // DDW only
    std::optional<double> odc_fitness;
};

struct OdcCounts {
    std::size_t best = 0;
    std::size_t better = 0;
    std::size_t worst = 0;
    std::size_t total() const noexcept { return best + better + worst; }
};

/// Complete output of one optimizer run.
struct RunRecord {
    std::string algorithm;  // ddw | pso | gwo
    std::string mode;       // template | blackbox
    std::string problem;
    std::vector<std::pair<std::string, double>> parameters;
    std::uint64_t seed = 0;
    std::vector<IterationStats> history;
    Individual best;
    double wall_time_s = 0.0;

    double best_fitness() const { return best.fitness(); }
    OdcCounts odc_counts() const;
};

/// Called after every iteration with the new population.
using IterationObserver = std::function<void(std::size_t iteration, std::span<const Individual> population)>;

/// DDW in template mode against a reference dataset.
RunRecord run(const ReferenceDataset& dataset, const EngineConfig& config, const IterationObserver& observer = {});

/// DDW in blackbox mode: one fixed-length channel, uniform initialization
/// inside the objective's box, ODC replaced by coordinate probing.
RunRecord run(const Objective& objective, const EngineConfig& config, const IterationObserver& observer = {});

/// Mean and population standard deviation of the fitness values.
std::pair<double, double> fitness_moments(std::span<const Individual> population);

}  // namespace ddw
