#include "ddw/fitness.hpp"

#include <cmath>

#include "ddw/error.hpp"
#include "ddw/mapping.hpp"

namespace ddw {

FitnessReport template_fitness(const Individual& x, const ReferenceDataset& dataset) {
    const std::size_t channels = dataset.channel_count();
    if (x.channel_count() != channels)
        throw InvalidInput("individual has " + std::to_string(x.channel_count()) + " channels, dataset has " +
                           std::to_string(channels));

    // slot[c]: dataset channel index for channel c of x
    std::vector<std::size_t> slot(channels);
    for (std::size_t c = 0; c < channels; ++c) {
        slot[c] = dataset.channel_index(x.channels[c].name);
        for (std::size_t k = 0; k < c; ++k)
            if (slot[k] == slot[c]) throw InvalidInput("duplicate channel '" + x.channels[c].name + "'");
    }

    FitnessReport report;
    report.per_dim_quality.resize(channels);
    for (std::size_t c = 0; c < channels; ++c) report.per_dim_quality[c].assign(x.channels[c].series.size(), 0.0);

    double sum_over_cycles = 0.0;
    for (const Cycle& cycle : dataset.cycles()) {
        double sum_over_channels = 0.0;
        for (std::size_t c = 0; c < channels; ++c) {
            const MappingResult m = map_series(x.channels[c].series, cycle.channels[slot[c]]);
            sum_over_channels += m.total;
            std::vector<double>& q = report.per_dim_quality[c];
            for (std::size_t i = 0; i < q.size(); ++i) q[i] += m.per_dim[i];
        }
        sum_over_cycles += sum_over_channels / static_cast<double>(channels);
    }
    const double n = static_cast<double>(dataset.size());
    report.fitness = sum_over_cycles / n;
    for (auto& q : report.per_dim_quality)
        for (double& v : q) v /= n;
    return report;
}

FitnessReport blackbox_fitness(const Individual& x, const Objective& objective) {
    if (x.channel_count() != 1) throw InvalidInput("blackbox individuals have exactly one channel");
    const Series& s = x.channels.front().series;
    if (s.size() != objective.dim)
        throw InvalidInput("point has " + std::to_string(s.size()) + " coordinates, objective '" + objective.name +
                           "' expects " + std::to_string(objective.dim));
    FitnessReport report;
    report.fitness = objective(s.values());
    if (!std::isfinite(report.fitness)) throw InvalidInput("objective '" + objective.name + "' returned a non-finite value");
    return report;
}

Individual make_point_individual(std::vector<double> values, std::uint64_t birth) {
    Individual ind;
    ind.channels.push_back({"x", Series(std::move(values))});
    ind.birth = birth;
    return ind;
}

}  // namespace ddw
