#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ddw/dataset.hpp"
#include "ddw/engine.hpp"
#include "ddw/fitness.hpp"
#include "ddw/random.hpp"

namespace ddw {

/// Global-best PSO. Velocities start at zero and are limited to
/// vmax_frac * (upper - lower) per coordinate.
struct PsoParams {
    double inertia = 0.8;
    double c1 = 1.49445;
    double c2 = 1.49445;
    double vmax_frac = 0.2;
};

/// Grey wolf optimizer; the control parameter decays linearly from a_initial to 0.
struct GwoParams {
    double a_initial = 2.0;
};

enum class BaselineAlgorithm { pso, gwo };

struct BaselineConfig {
    BaselineAlgorithm algorithm = BaselineAlgorithm::pso;
    PsoParams pso;
    GwoParams gwo;
    std::size_t population_size = 50;
    std::size_t max_iterations = 500;
    int threads = 0;
};

/// Initial position of agent k. Defaults to uniform in the objective's box.
using Initializer = std::function<std::vector<double>(std::size_t k, Rng& rng)>;

/// Runs PSO or GWO. Agent k initializes from substream (seed, 0, k). The
/// record's best is the best point seen, as a one-channel individual.
RunRecord run_baseline(const BaselineConfig& config, const Objective& objective, std::uint64_t seed,
                       const Initializer& init = {}, const IterationObserver& observer = {});

/// Fixed-length view of a template problem: every channel has the modal
/// length, coordinates are the channels laid end to end.
struct FixedTemplateProblem {
    Objective objective;
    Initializer init;  // modal average reference + zero-mean envelope perturbation
    std::vector<std::string> channel_names;
    std::size_t length = 0;

    Individual decode(std::span<const double> x) const;
};

/// The returned objective refers to `dataset`, which must outlive it.
FixedTemplateProblem make_fixed_template_problem(const ReferenceDataset& dataset);

}  // namespace ddw
