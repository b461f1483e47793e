#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ddw/dataset.hpp"
#include "ddw/individual.hpp"

namespace ddw {

/// Scalar objective over fixed-length real vectors, with per-coordinate box.
struct Objective {
    std::string name;
    std::size_t dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<double(std::span<const double>)> fn;

    double operator()(std::span<const double> x) const { return fn(x); }
    ValueLimits limits() const { return {0.0, 0.0, lower, upper}; }
};

/// Mean over cycles of the mean over channels of map_series(x_c, cycle_c).total,
/// with per-dimension quality averaged over cycles. Channels are matched by
/// name; quality follows x's channel order.
///
/// Any channel length is accepted; the search keeps lengths inside the
/// dataset's range itself. Throws InvalidInput on a channel-name mismatch.
FitnessReport template_fitness(const Individual& x, const ReferenceDataset& dataset);

/// objective(values) for a single-channel individual; no quality cache.
/// Throws InvalidInput when the channel count or length does not match.
FitnessReport blackbox_fitness(const Individual& x, const Objective& objective);

/// Wraps a point as a one-channel individual named "x".
Individual make_point_individual(std::vector<double> values, std::uint64_t birth = 0);

/// Evaluation strategy used by the engine and the population kernels.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual FitnessReport evaluate(const Individual& x) const = 0;
};

class TemplateEvaluator final : public Evaluator {
public:
    explicit TemplateEvaluator(const ReferenceDataset& dataset) : dataset_(dataset) {}
    FitnessReport evaluate(const Individual& x) const override { return template_fitness(x, dataset_); }
    const ReferenceDataset& dataset() const noexcept { return dataset_; }

private:
    const ReferenceDataset& dataset_;
};

class BlackboxEvaluator final : public Evaluator {
public:
    explicit BlackboxEvaluator(const Objective& objective) : objective_(objective) {}
    FitnessReport evaluate(const Individual& x) const override { return blackbox_fitness(x, objective_); }
    const Objective& objective() const noexcept { return objective_; }

private:
    const Objective& objective_;
};

}  // namespace ddw
