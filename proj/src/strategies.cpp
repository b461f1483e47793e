#include "ddw/strategies.hpp"

#include <cmath>
#include <numbers>

#include "ddw/error.hpp"
#include "ddw/mapping.hpp"

namespace ddw {

void validate(const LevyParams& params) {
    if (!(params.lambda > 1.0 && params.lambda <= 3.0))
        throw ConfigError("levy lambda must lie in (1, 3], got " + std::to_string(params.lambda));
}

double mantegna_draw(double beta, Rng& rng) {
    std::normal_distribution<double> std_normal(0.0, 1.0);
    if (beta >= 2.0) {
        // Mantegna's scale vanishes at beta = 2; the stable law there is N(0, 2).
        return std::numbers::sqrt2 * std_normal(rng);
    }
    const double sigma_u =
        std::pow(std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0) /
                     (std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0)),
                 1.0 / beta);
    const double u = sigma_u * std_normal(rng);
    double v = 0.0;
    while (v == 0.0) v = std_normal(rng);
    return u / std::pow(std::abs(v), 1.0 / beta);
}

double levy_step(const LevyParams& params, std::size_t gen, std::size_t max_gen, Rng& rng) {
    validate(params);
    if (max_gen == 0 || gen > max_gen) throw InvalidInput("levy_step needs 0 <= gen <= max_gen and max_gen >= 1");
    const double ratio = static_cast<double>(gen) / static_cast<double>(max_gen);
    const double damping = 1.0 - ratio * ratio;
    const double raw = mantegna_draw(params.lambda - 1.0, rng);
    if (damping == 0.0) return 0.0;
    return raw * damping;
}

SpiralCoefficients spiral_coefficients(std::size_t length, SpiralKind kind, Rng& rng) {
    if (length == 0) throw InvalidInput("spiral coefficients need length >= 1");
    SpiralCoefficients out;
    out.xcoef.resize(length);
    out.ycoef.resize(length);
    double xmax = 0.0;
    double ymax = 0.0;
    // An all-zero draw (theta == 0 everywhere) cannot be normalised; redraw.
    while (xmax == 0.0 || ymax == 0.0) {
        xmax = ymax = 0.0;
        for (std::size_t j = 0; j < length; ++j) {
            const double theta = 10.0 * std::numbers::pi * uniform01(rng);
            const double r = theta + 1.5 * uniform01(rng);
            if (kind == SpiralKind::archimedean) {
                out.xcoef[j] = r * std::sin(theta);
                out.ycoef[j] = r * std::cos(theta);
            } else {
                out.xcoef[j] = r * std::sinh(theta);
                out.ycoef[j] = r * std::cosh(theta);
            }
            xmax = std::max(xmax, std::abs(out.xcoef[j]));
            ymax = std::max(ymax, std::abs(out.ycoef[j]));
        }
    }
    for (double& v : out.xcoef) v /= xmax;
    for (double& v : out.ycoef) v /= ymax;
    return out;
}

namespace {

void require_same_channels(const Individual& a, const Individual& b) {
    if (a.channel_count() != b.channel_count()) throw InvalidInput("individuals have different channel counts");
    for (std::size_t c = 0; c < a.channel_count(); ++c)
        if (a.channels[c].name != b.channels[c].name) throw InvalidInput("individuals have different channel names");
}

// Value of `other` matched with each element of `frame`: the member of the
// element's dirs range closest to the frame value.
std::vector<double> matched_values(const Series& frame, const Series& other) {
    const MappingResult m = map_series(frame, other);
    std::vector<double> out(frame.size());
    for (std::size_t j = 0; j < frame.size(); ++j)
        out[j] = other[closest_in_range(other.values(), m.dirs[j], frame[j])];
    return out;
}

const ValueLimits& limits_for(std::span<const ValueLimits> limits, std::size_t c) {
    if (c >= limits.size()) throw InvalidInput("missing value limits for channel " + std::to_string(c));
    return limits[c];
}

Newborns empty_newborns(const Individual& frame) {
    Newborns out;
    for (Individual& n : out) n.channels.reserve(frame.channel_count());
    return out;
}

}  // namespace

Individual strategy_a(const Individual& x_best, std::size_t gen, std::size_t max_gen, const LevyParams& levy,
                      std::span<const ValueLimits> limits, DimRange range, Rng& rng) {
    validate(levy);
    const bool has_quality = x_best.report && x_best.report->has_quality();
    Individual out;
    out.channels.reserve(x_best.channel_count());
    for (std::size_t c = 0; c < x_best.channel_count(); ++c) {
        const ValueLimits& lim = limits_for(limits, c);
        const Series& base = x_best.series(c);
        std::vector<double> values(base.size());
        for (std::size_t j = 0; j < base.size(); ++j) {
            const double span = lim.upper(j) - lim.lower(j);
            values[j] = lim.clamp(j, base[j] + span * levy_step(levy, gen, max_gen, rng));
        }
        const std::size_t target = uniform_index(rng, range.min, range.max);
        Series moved(std::move(values));
        if (target != moved.size()) {
            if (has_quality) {
                moved = resize_series(moved, target, range, ResizeMode::worst, x_best.quality(c), rng);
            } else {
                moved = resize_series(moved, target, range, ResizeMode::random, {}, rng);
            }
        }
        out.channels.push_back({x_best.channels[c].name, std::move(moved)});
    }
    return out;
}

namespace detail {

Newborns strategy_b_paths(const Individual& x_b, const Individual& x_better, const Individual& d_best,
                          std::span<const ValueLimits> limits, const CoefficientSource& coefficients) {
    require_same_channels(x_b, x_better);
    require_same_channels(x_b, d_best);
    Newborns out = empty_newborns(x_b);
    for (std::size_t c = 0; c < x_b.channel_count(); ++c) {
        const ValueLimits& lim = limits_for(limits, c);
        const Series& frame = x_b.series(c);
        const std::vector<double> better = matched_values(frame, x_better.series(c));
        const std::vector<double> dbest = matched_values(frame, d_best.series(c));
        const SpiralCoefficients k = coefficients(c, frame.size());

        std::array<std::vector<double>, 3> v;
        for (auto& s : v) s.resize(frame.size());
        for (std::size_t j = 0; j < frame.size(); ++j) {
            const double route1 = k.xcoef[j] * (better[j] - frame[j]);
            const double route2 = k.ycoef[j] * (dbest[j] - frame[j]);
            v[0][j] = lim.clamp(j, frame[j] + route1);
            v[1][j] = lim.clamp(j, frame[j] + route2);
            v[2][j] = lim.clamp(j, frame[j] + (route1 + route2));
        }
        for (std::size_t n = 0; n < 3; ++n) out[n].channels.push_back({x_b.channels[c].name, Series(std::move(v[n]))});
    }
    return out;
}

}  // namespace detail

Newborns strategy_b(const Individual& x_b, const Individual& x_better, const Individual& d_best,
                    std::span<const ValueLimits> limits, const CoefficientSource& coefficients) {
    if (!(x_better.fitness() < x_b.fitness()))
        throw InvalidInput("strategy B partner must have strictly lower fitness than the current individual");
    return detail::strategy_b_paths(x_b, x_better, d_best, limits, coefficients);
}

Newborns strategy_b(const Individual& x_b, const Individual& x_better, const Individual& d_best,
                    std::span<const ValueLimits> limits, Rng& rng) {
    return strategy_b(x_b, x_better, d_best, limits, [&rng](std::size_t, std::size_t len) {
        return spiral_coefficients(len, SpiralKind::archimedean, rng);
    });
}

Newborns strategy_c(const Individual& x_c, const Individual& x_best, const Individual& d_best,
                    std::span<const ValueLimits> limits, const CoefficientSource& coefficients) {
    require_same_channels(x_best, x_c);
    require_same_channels(x_best, d_best);
    Newborns out = empty_newborns(x_best);
    for (std::size_t c = 0; c < x_best.channel_count(); ++c) {
        const ValueLimits& lim = limits_for(limits, c);
        const Series& best = x_best.series(c);
        const Series& dbest = d_best.series(c);
        if (best.size() != dbest.size())
            throw InvalidInput("x_best and d_best must share channel lengths");
        const Series& xc = x_c.series(c);
        const std::vector<double> match1 = matched_values(best, xc);
        const std::vector<double> match2 = matched_values(dbest, xc);
        const SpiralCoefficients k = coefficients(c, best.size());

        std::array<std::vector<double>, 3> v;
        for (auto& s : v) s.resize(best.size());
        for (std::size_t j = 0; j < best.size(); ++j) {
            const double route1 = k.xcoef[j] * (match1[j] - best[j]);
            const double route2 = k.ycoef[j] * (match2[j] - dbest[j]);
            v[0][j] = lim.clamp(j, best[j] + route1);
            v[1][j] = lim.clamp(j, dbest[j] + route2);
            v[2][j] = lim.clamp(j, best[j] + (route1 + route2));
        }
        for (std::size_t n = 0; n < 3; ++n)
            out[n].channels.push_back({x_best.channels[c].name, Series(std::move(v[n]))});
    }
    return out;
}

Newborns strategy_c(const Individual& x_c, const Individual& x_best, const Individual& d_best,
                    std::span<const ValueLimits> limits, Rng& rng) {
    return strategy_c(x_c, x_best, d_best, limits, [&rng](std::size_t, std::size_t len) {
        return spiral_coefficients(len, SpiralKind::hyperbolic, rng);
    });
}

}  // namespace ddw
