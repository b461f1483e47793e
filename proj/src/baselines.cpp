#include "ddw/baselines.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>

#include "ddw/error.hpp"
#include "ddw/parallel.hpp"

namespace ddw {

namespace {

std::vector<Individual> make_swarm(const std::vector<std::vector<double>>& positions) {
    std::vector<Individual> swarm;
    swarm.reserve(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k) swarm.push_back(make_point_individual(positions[k], k));
    return swarm;
}

std::vector<std::vector<double>> initial_positions(const Objective& objective, std::size_t m, std::uint64_t seed,
                                                   const Initializer& init) {
    std::vector<std::vector<double>> x(m);
    for (std::size_t k = 0; k < m; ++k) {
        Rng rng = substream(seed, 0, k);
        if (init) {
            x[k] = init(k, rng);
            if (x[k].size() != objective.dim) throw InvalidInput("initializer returned a point of the wrong length");
        } else {
            x[k].resize(objective.dim);
            for (std::size_t j = 0; j < objective.dim; ++j)
                x[k][j] = objective.lower[j] + (objective.upper[j] - objective.lower[j]) * uniform01(rng);
        }
    }
    return x;
}

void record_iteration(RunRecord& record, std::size_t iter, double best, std::span<const Individual> swarm) {
    IterationStats stats;
    stats.iteration = iter;
    stats.best_fitness = best;
    std::tie(stats.mean_fitness, stats.std_fitness) = fitness_moments(swarm);
    record.history.push_back(stats);
}

RunRecord run_pso(const BaselineConfig& config, const Objective& objective, std::uint64_t seed,
                  const Initializer& init, const IterationObserver& observer) {
    const PsoParams& p = config.pso;
    const std::size_t m = config.population_size;
    const std::size_t n = objective.dim;
    const BlackboxEvaluator evaluator(objective);

    RunRecord record;
    record.algorithm = "pso";
    record.parameters = {{"population_size", static_cast<double>(m)},
                         {"max_iterations", static_cast<double>(config.max_iterations)},
                         {"inertia", p.inertia},
                         {"c1", p.c1},
                         {"c2", p.c2},
                         {"vmax_frac", p.vmax_frac}};

    std::vector<std::vector<double>> x = initial_positions(objective, m, seed, init);
    std::vector<std::vector<double>> v(m, std::vector<double>(n, 0.0));
    std::vector<Individual> swarm = make_swarm(x);
    evaluate_population(swarm, evaluator, config.threads);

    std::vector<std::vector<double>> pbest = x;
    std::vector<double> pbest_f(m);
    for (std::size_t k = 0; k < m; ++k) pbest_f[k] = swarm[k].fitness();
    std::size_t g = static_cast<std::size_t>(std::min_element(pbest_f.begin(), pbest_f.end()) - pbest_f.begin());
    std::vector<double> gbest = pbest[g];
    double gbest_f = pbest_f[g];

    std::vector<double> vmax(n);
    for (std::size_t j = 0; j < n; ++j) vmax[j] = p.vmax_frac * (objective.upper[j] - objective.lower[j]);

    for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
        parallel_for(m, config.threads, [&](std::size_t k) {
            Rng rng = substream(seed, iter + 1, k);
            for (std::size_t j = 0; j < n; ++j) {
                const double r1 = uniform01(rng);
                const double r2 = uniform01(rng);
                double vj = p.inertia * v[k][j] + p.c1 * r1 * (pbest[k][j] - x[k][j]) + p.c2 * r2 * (gbest[j] - x[k][j]);
                vj = std::clamp(vj, -vmax[j], vmax[j]);
                v[k][j] = vj;
                x[k][j] = std::clamp(x[k][j] + vj, objective.lower[j], objective.upper[j]);
            }
        });
        swarm = make_swarm(x);
        evaluate_population(swarm, evaluator, config.threads);
        for (std::size_t k = 0; k < m; ++k) {
            const double f = swarm[k].fitness();
            if (f < pbest_f[k]) {
                pbest_f[k] = f;
                pbest[k] = x[k];
            }
            if (f < gbest_f) {
                gbest_f = f;
                gbest = x[k];
            }
        }
        record_iteration(record, iter, gbest_f, swarm);
        if (observer) observer(iter, swarm);
    }

    record.best = make_point_individual(gbest);
    record.best.report = FitnessReport{gbest_f, {}};
    return record;
}

struct Leader {
    std::vector<double> x;
    double f = std::numeric_limits<double>::infinity();
};

// Keeps alpha <= beta <= delta, shifting ranks down when a better wolf appears.
void update_leaders(std::array<Leader, 3>& leaders, const std::vector<double>& x, double f) {
    for (std::size_t r = 0; r < 3; ++r) {
        if (f < leaders[r].f) {
            for (std::size_t s = 2; s > r; --s) leaders[s] = leaders[s - 1];
            leaders[r] = {x, f};
            return;
        }
    }
}

RunRecord run_gwo(const BaselineConfig& config, const Objective& objective, std::uint64_t seed,
                  const Initializer& init, const IterationObserver& observer) {
    const std::size_t m = config.population_size;
    const std::size_t n = objective.dim;
    if (m < 3) throw ConfigError("GWO needs at least 3 wolves");
    const BlackboxEvaluator evaluator(objective);

    RunRecord record;
    record.algorithm = "gwo";
    record.parameters = {{"population_size", static_cast<double>(m)},
                         {"max_iterations", static_cast<double>(config.max_iterations)},
                         {"a", config.gwo.a_initial}};

    std::vector<std::vector<double>> x = initial_positions(objective, m, seed, init);
    std::vector<Individual> swarm = make_swarm(x);
    evaluate_population(swarm, evaluator, config.threads);
    std::array<Leader, 3> leaders;
    for (std::size_t k = 0; k < m; ++k) update_leaders(leaders, x[k], swarm[k].fitness());

    const double t_max = static_cast<double>(config.max_iterations);
    for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
        const double a = config.gwo.a_initial * (1.0 - static_cast<double>(iter) / t_max);
        parallel_for(m, config.threads, [&](std::size_t k) {
            Rng rng = substream(seed, iter + 1, k);
            for (std::size_t j = 0; j < n; ++j) {
                double sum = 0.0;
                for (const Leader& leader : leaders) {
                    const double big_a = 2.0 * a * uniform01(rng) - a;
                    const double big_c = 2.0 * uniform01(rng);
                    const double dist = std::abs(big_c * leader.x[j] - x[k][j]);
                    sum += leader.x[j] - big_a * dist;
                }
                x[k][j] = std::clamp(sum / 3.0, objective.lower[j], objective.upper[j]);
            }
        });
        swarm = make_swarm(x);
        evaluate_population(swarm, evaluator, config.threads);
        for (std::size_t k = 0; k < m; ++k) update_leaders(leaders, x[k], swarm[k].fitness());
        record_iteration(record, iter, leaders[0].f, swarm);
        if (observer) observer(iter, swarm);
    }

    record.best = make_point_individual(leaders[0].x);
    record.best.report = FitnessReport{leaders[0].f, {}};
    return record;
}

}  // namespace

RunRecord run_baseline(const BaselineConfig& config, const Objective& objective, std::uint64_t seed,
                       const Initializer& init, const IterationObserver& observer) {
    if (config.population_size < 1) throw ConfigError("population size must be positive");
    if (config.max_iterations < 1) throw ConfigError("max iterations must be at least 1");
    if (objective.dim == 0 || objective.lower.size() != objective.dim || objective.upper.size() != objective.dim)
        throw ConfigError("objective '" + objective.name + "' needs one bound pair per coordinate");

    const auto started = std::chrono::steady_clock::now();
    RunRecord record = config.algorithm == BaselineAlgorithm::pso ? run_pso(config, objective, seed, init, observer)
                                                                  : run_gwo(config, objective, seed, init, observer);
    record.mode = "blackbox";
    record.problem = objective.name;
    record.seed = seed;
    record.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

Individual FixedTemplateProblem::decode(std::span<const double> x) const {
    if (x.size() != channel_names.size() * length) throw InvalidInput("point does not match the template layout");
    Individual ind;
    for (std::size_t c = 0; c < channel_names.size(); ++c) {
        const auto first = x.begin() + static_cast<std::ptrdiff_t>(c * length);
        ind.channels.push_back({channel_names[c], Series(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(length)))});
    }
    return ind;
}

FixedTemplateProblem make_fixed_template_problem(const ReferenceDataset& dataset) {
    FixedTemplateProblem p;
    p.channel_names = dataset.channel_names();
    p.length = modal_dimension(dataset).length;
    const std::size_t channels = dataset.channel_count();
    const std::vector<ChannelBounds> bounds = channel_bounds(dataset);

    std::vector<std::vector<double>> reference(channels);
    for (std::size_t c = 0; c < channels; ++c) reference[c] = average_reference(dataset, c).vector();

    Objective& o = p.objective;
    o.name = "template@" + std::to_string(p.length);
    o.dim = channels * p.length;
    for (std::size_t c = 0; c < channels; ++c) {
        o.lower.insert(o.lower.end(), p.length, bounds[c].global_min);
        o.upper.insert(o.upper.end(), p.length, bounds[c].global_max);
    }
    const std::vector<std::string> names = p.channel_names;
    const std::size_t length = p.length;
    o.fn = [&dataset, names, length](std::span<const double> x) {
        FixedTemplateProblem view;
        view.channel_names = names;
        view.length = length;
        return template_fitness(view.decode(x), dataset).fitness;
    };

    p.init = [bounds, reference, length](std::size_t, Rng& rng) {
        std::vector<double> x;
        x.reserve(reference.size() * length);
        for (std::size_t c = 0; c < reference.size(); ++c) {
            for (std::size_t i = 0; i < length; ++i) {
                const double half = 0.5 * (bounds[c].env_max[i] - bounds[c].env_min[i]);
                const double v = reference[c][i] + half * (2.0 * uniform01(rng) - 1.0);
                x.push_back(std::clamp(v, bounds[c].global_min, bounds[c].global_max));
            }
        }
        return x;
    };
    return p;
}

}  // namespace ddw
