#include "ddw/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "ddw/error.hpp"
#include "ddw/parallel.hpp"
#include "ddw/random.hpp"

namespace ddw {

void validate(const EngineConfig& config) {
    if (config.population_size < 4) throw ConfigError("population size must be at least 4");
    if (config.max_iterations < 1) throw ConfigError("max iterations must be at least 1");
    if (config.a_frac < 0 || config.b_frac < 0 || config.c_frac < 0)
        throw ConfigError("partition fractions must be nonnegative");
    if (std::abs(config.a_frac + config.b_frac + config.c_frac - 1.0) > 1e-9)
        throw ConfigError("partition fractions must sum to 1");
    validate(config.levy);
    const PartitionSizes p = partition_sizes(config.population_size, config);
    if (p.a + p.b > config.population_size) throw ConfigError("partition leaves no room for Part C");
}

PartitionSizes partition_sizes(std::size_t population_size, const EngineConfig& config) {
    const double m = static_cast<double>(population_size);
    // Small epsilon: 0.45 * 20 must floor to 9 even if it rounds to 8.999...
    const auto floor_of = [](double v) { return static_cast<std::size_t>(std::floor(v + 1e-9)); };
    PartitionSizes p;
    p.a = std::max<std::size_t>(1, floor_of(config.a_frac * m));
    p.b = floor_of(config.b_frac * m);
    p.c = population_size >= p.a + p.b ? population_size - p.a - p.b : 0;
    return p;
}

Partition partition(std::span<const Individual> sorted, const EngineConfig& config) {
    const PartitionSizes p = partition_sizes(sorted.size(), config);
    return {sorted.subspan(0, p.a), sorted.subspan(p.a, p.b), sorted.subspan(p.a + p.b)};
}

namespace {

bool ranks_before(const Individual& x, const Individual& y) {
    const double fx = x.fitness();
    const double fy = y.fitness();
    if (fx != fy) return fx < fy;
    return x.birth < y.birth;
}

}  // namespace

void sort_population(std::vector<Individual>& population) {
    std::stable_sort(population.begin(), population.end(), ranks_before);
}

std::vector<Individual> select_next(std::span<const Individual> current, std::span<const Individual> newborns_a,
                                    std::span<const Individual> newborns_bc, const Individual& d_best,
                                    const EngineConfig& config) {
    const std::size_t m = config.population_size;
    if (newborns_a.size() > m) throw InvalidState("more Part A newborns than population slots");
    const std::size_t keep = m - newborns_a.size();

    std::vector<const Individual*> pool;
    pool.reserve(current.size() + newborns_bc.size() + 1);
    for (const Individual& x : current) pool.push_back(&x);
    for (const Individual& x : newborns_bc) pool.push_back(&x);
    pool.push_back(&d_best);
    if (pool.size() < keep) throw InvalidState("selection pool smaller than M - |A|");

    std::stable_sort(pool.begin(), pool.end(),
                     [](const Individual* x, const Individual* y) { return ranks_before(*x, *y); });

    std::vector<Individual> next;
    next.reserve(m);
    for (std::size_t i = 0; i < keep; ++i) next.push_back(*pool[i]);
    for (const Individual& x : newborns_a) next.push_back(x);
    return next;
}

std::pair<double, double> fitness_moments(std::span<const Individual> population) {
    if (population.empty()) return {0.0, 0.0};
    double sum = 0.0;
    for (const Individual& x : population) sum += x.fitness();
    const double mean = sum / static_cast<double>(population.size());
    double ss = 0.0;
    for (const Individual& x : population) ss += (x.fitness() - mean) * (x.fitness() - mean);
    return {mean, std::sqrt(ss / static_cast<double>(population.size()))};
}

OdcCounts RunRecord::odc_counts() const {
    OdcCounts counts;
    for (const IterationStats& s : history) {
        if (!s.odc) continue;
        switch (*s.odc) {
            case OdcClass::best: ++counts.best; break;
            case OdcClass::better: ++counts.better; break;
            case OdcClass::worst: ++counts.worst; break;
        }
    }
    return counts;
}

namespace {

// What differs between template and blackbox runs.
class SearchMode {
public:
    virtual ~SearchMode() = default;
    virtual std::vector<Individual> initialize(std::size_t m, std::uint64_t seed) const = 0;
    virtual const Evaluator& evaluator() const = 0;
    virtual Individual collect(std::span<const Individual> part_a) const = 0;
    virtual std::span<const ValueLimits> limits() const = 0;
    virtual DimRange dim_range() const = 0;
    virtual std::string name() const = 0;
};

class TemplateMode final : public SearchMode {
public:
    explicit TemplateMode(const ReferenceDataset& dataset) : dataset_(dataset), evaluator_(dataset) {
        for (const ChannelBounds& b : channel_bounds(dataset)) limits_.push_back(b.limits());
    }
    std::vector<Individual> initialize(std::size_t m, std::uint64_t seed) const override {
        return init_population(dataset_, m, seed);
    }
    const Evaluator& evaluator() const override { return evaluator_; }
    Individual collect(std::span<const Individual> part_a) const override { return odc_collect(part_a, dataset_); }
    std::span<const ValueLimits> limits() const override { return limits_; }
    DimRange dim_range() const override { return dataset_.dim_range(); }
    std::string name() const override { return "template"; }

private:
    const ReferenceDataset& dataset_;
    TemplateEvaluator evaluator_;
    std::vector<ValueLimits> limits_;
};

class BlackboxMode final : public SearchMode {
public:
    explicit BlackboxMode(const Objective& objective) : objective_(objective), evaluator_(objective) {
        if (objective.dim == 0 || objective.lower.size() != objective.dim || objective.upper.size() != objective.dim)
            throw ConfigError("objective '" + objective.name + "' needs one bound pair per coordinate");
        limits_.push_back(objective.limits());
    }
    std::vector<Individual> initialize(std::size_t m, std::uint64_t seed) const override {
        std::vector<Individual> population;
        population.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            Rng rng = substream(seed, 0, k);
            std::vector<double> x(objective_.dim);
            for (std::size_t j = 0; j < x.size(); ++j)
                x[j] = objective_.lower[j] + (objective_.upper[j] - objective_.lower[j]) * uniform01(rng);
            population.push_back(make_point_individual(std::move(x), k));
        }
        return population;
    }
    const Evaluator& evaluator() const override { return evaluator_; }
    Individual collect(std::span<const Individual> part_a) const override {
        return odc_probe_blackbox(part_a, objective_);
    }
    std::span<const ValueLimits> limits() const override { return limits_; }
    DimRange dim_range() const override { return {objective_.dim, objective_.dim}; }
    std::string name() const override { return "blackbox"; }

private:
    const Objective& objective_;
    BlackboxEvaluator evaluator_;
    std::vector<ValueLimits> limits_;
};

// Per-member output of one iteration's strategy fan-out.
struct MemberOutput {
    std::vector<Individual> newborns;
};

RunRecord run_engine(const SearchMode& mode, const std::string& problem, const EngineConfig& config,
                     const IterationObserver& observer) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    const std::size_t m = config.population_size;
    const PartitionSizes sizes = partition_sizes(m, config);

    RunRecord record;
    record.algorithm = "ddw";
    record.mode = mode.name();
    record.problem = problem;
    record.seed = config.seed;
    record.parameters = {{"population_size", static_cast<double>(m)},
                         {"max_iterations", static_cast<double>(config.max_iterations)},
                         {"a_frac", config.a_frac},
                         {"b_frac", config.b_frac},
                         {"c_frac", config.c_frac},
                         {"levy_lambda", config.levy.lambda}};
    if (config.target_fitness) record.parameters.emplace_back("target_fitness", *config.target_fitness);

    std::vector<Individual> population = mode.initialize(m, config.seed);
    evaluate_population(population, mode.evaluator(), config.threads);
    std::uint64_t next_birth = m;

    for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
        sort_population(population);
        const std::span<const Individual> sorted(population);
        const Partition parts = partition(sorted, config);
        const Individual& x_best = sorted.front();

        Individual d_best = mode.collect(parts.a);
        d_best.birth = next_birth++;
        const OdcClass odc_class = classify_odc(d_best.fitness(), parts.a);

        const std::uint64_t stage = iter + 1;
        std::vector<MemberOutput> outputs(m);
        parallel_for(m, config.threads, [&](std::size_t k) {
            Rng rng = substream(config.seed, stage, k);
            std::vector<Individual>& born = outputs[k].newborns;
            if (k < sizes.a) {
                born.push_back(strategy_a(x_best, iter, config.max_iterations, config.levy, mode.limits(),
                                          mode.dim_range(), rng));
            } else if (k < sizes.a + sizes.b) {
                const Individual& x_b = sorted[k];
                // Strictly better members of A and B form a prefix of the sorted population.
                const auto first_not_better =
                    std::find_if(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sizes.a + sizes.b),
                                 [&](const Individual& y) { return !(y.fitness() < x_b.fitness()); });
                const auto better_count = static_cast<std::size_t>(first_not_better - sorted.begin());
                const CoefficientSource spiral = [&rng](std::size_t, std::size_t len) {
                    return spiral_coefficients(len, SpiralKind::archimedean, rng);
                };
                Newborns three;
                if (better_count == 0) {
                    three = detail::strategy_b_paths(x_b, x_best, d_best, mode.limits(), spiral);
                } else {
                    const Individual& x_better = sorted[uniform_index(rng, 0, better_count - 1)];
                    three = strategy_b(x_b, x_better, d_best, mode.limits(), spiral);
                }
                for (Individual& n : three) born.push_back(std::move(n));
            } else {
                Newborns three = strategy_c(sorted[k], x_best, d_best, mode.limits(), rng);
                for (Individual& n : three) born.push_back(std::move(n));
            }
        });

        std::vector<Individual> newborns_a;
        std::vector<Individual> newborns_bc;
        newborns_a.reserve(sizes.a);
        newborns_bc.reserve(3 * (m - sizes.a));
        for (std::size_t k = 0; k < m; ++k) {
            for (Individual& n : outputs[k].newborns) {
                n.birth = next_birth++;
                (k < sizes.a ? newborns_a : newborns_bc).push_back(std::move(n));
            }
        }
        evaluate_population(newborns_a, mode.evaluator(), config.threads);
        evaluate_population(newborns_bc, mode.evaluator(), config.threads);

        population = select_next(population, newborns_a, newborns_bc, d_best, config);

        IterationStats stats;
        stats.iteration = iter;
        stats.best_fitness = std::min_element(population.begin(), population.end(), ranks_before)->fitness();
        std::tie(stats.mean_fitness, stats.std_fitness) = fitness_moments(population);
        stats.odc = odc_class;
        stats.odc_fitness = d_best.fitness();
        record.history.push_back(stats);

        if (observer) observer(iter, population);
        if (config.target_fitness && stats.best_fitness <= *config.target_fitness) break;
    }

    record.best = *std::min_element(population.begin(), population.end(), ranks_before);
    record.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

}  // namespace

RunRecord run(const ReferenceDataset& dataset, const EngineConfig& config, const IterationObserver& observer) {
    const TemplateMode mode(dataset);
    return run_engine(mode, "dataset", config, observer);
}

RunRecord run(const Objective& objective, const EngineConfig& config, const IterationObserver& observer) {
    const BlackboxMode mode(objective);
    return run_engine(mode, objective.name, config, observer);
}

}  // namespace ddw
