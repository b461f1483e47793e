#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "ddw/dataset.hpp"
#include "ddw/individual.hpp"
#include "ddw/random.hpp"

namespace ddw {

/// Lévy flight settings. `lambda` is the tail exponent of the step-length
/// density (p(s) ~ s^-lambda) and must lie in (1, 3]; Mantegna's stability
/// index is lambda - 1.
struct LevyParams {
    double lambda = 2.5;
};

/// Throws ConfigError when lambda is outside (1, 3].
void validate(const LevyParams& params);

/// Raw Mantegna draw with stability index `beta` in (0, 2].
double mantegna_draw(double beta, Rng& rng);

/// Lévy step damped by 1 - (gen / max_gen)^2; exactly 0 at gen == max_gen.
double levy_step(const LevyParams& params, std::size_t gen, std::size_t max_gen, Rng& rng);

enum class SpiralKind { archimedean, hyperbolic };

/// Spiral modulation coefficients, one pair per dimension, each sequence
/// scaled so its largest magnitude is exactly 1.
struct SpiralCoefficients {
    std::vector<double> xcoef;
    std::vector<double> ycoef;
};

/// theta = 10*pi*u1, r = theta + 1.5*u2; archimedean uses r*sin/r*cos,
/// hyperbolic r*sinh/r*cosh; both sequences then normalised by max |.|.
SpiralCoefficients spiral_coefficients(std::size_t length, SpiralKind kind, Rng& rng);

/// Supplies coefficients for (channel index, channel length). Lets callers
/// pin the spiral draw; the rng overloads below use spiral_coefficients.
using CoefficientSource = std::function<SpiralCoefficients(std::size_t channel, std::size_t length)>;

using Newborns = std::array<Individual, 3>;

/// Strategy A: Lévy exploration around x_best. Each value of x_best moves by
/// (hi - lo) * levy_step, is clamped, and every channel is then resized to a
/// uniformly drawn length in `range` (worst mode using x_best's quality when
/// cached, random mode otherwise). Result is unevaluated.
Individual strategy_a(const Individual& x_best, std::size_t gen, std::size_t max_gen, const LevyParams& levy,
                      std::span<const ValueLimits> limits, DimRange range, Rng& rng);

/// Strategy B: three Archimedean-spiral paths in x_b's frame toward
/// x_better and d_best (route1, route2, route1 + route2). Throws InvalidInput
/// unless x_better's fitness is strictly below x_b's.
Newborns strategy_b(const Individual& x_b, const Individual& x_better, const Individual& d_best,
                    std::span<const ValueLimits> limits, Rng& rng);
Newborns strategy_b(const Individual& x_b, const Individual& x_better, const Individual& d_best,
                    std::span<const ValueLimits> limits, const CoefficientSource& coefficients);

/// Strategy C: three hyperbolic-spiral competitive paths anchored on x_best
/// and d_best, driven by x_c. Newborns have x_best's channel lengths.
Newborns strategy_c(const Individual& x_c, const Individual& x_best, const Individual& d_best,
                    std::span<const ValueLimits> limits, Rng& rng);
Newborns strategy_c(const Individual& x_c, const Individual& x_best, const Individual& d_best,
                    std::span<const ValueLimits> limits, const CoefficientSource& coefficients);

namespace detail {

/// Strategy B without the strict-improvement check; the engine uses it when
/// the fallback partner x_best ties x_b.
Newborns strategy_b_paths(const Individual& x_b, const Individual& x_better, const Individual& d_best,
                          std::span<const ValueLimits> limits, const CoefficientSource& coefficients);

}  // namespace detail

}  // namespace ddw
