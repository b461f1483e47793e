#include "ddw/dataset.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ddw/error.hpp"

namespace ddw {

ReferenceDataset::ReferenceDataset(std::vector<std::string> channel_names, std::vector<Cycle> cycles)
    : names_(std::move(channel_names)), cycles_(std::move(cycles)) {
    if (names_.empty()) throw ValidationError("dataset has no channels");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw ValidationError("channel names must be nonempty");
        for (std::size_t k = 0; k < i; ++k)
            if (names_[k] == names_[i]) throw ValidationError("duplicate channel name '" + names_[i] + "'");
    }
    if (cycles_.empty()) throw ValidationError("no cycles");

    range_ = {cycles_.front().length(), cycles_.front().length()};
    for (const Cycle& cycle : cycles_) {
        if (cycle.channels.size() != names_.size())
            throw ValidationError("cycle " + std::to_string(cycle.id) + " has " +
                                  std::to_string(cycle.channels.size()) + " channels, expected " +
                                  std::to_string(names_.size()));
        const std::size_t len = cycle.length();
        for (std::size_t c = 0; c < cycle.channels.size(); ++c) {
            if (cycle.channels[c].size() != len)
                throw ValidationError("cycle " + std::to_string(cycle.id) + ": channel '" + names_[c] +
                                      "' has length " + std::to_string(cycle.channels[c].size()) +
                                      " but channel '" + names_[0] + "' has length " + std::to_string(len));
        }
        range_.min = std::min(range_.min, len);
        range_.max = std::max(range_.max, len);
    }
}

std::size_t ReferenceDataset::channel_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw InvalidInput("unknown channel '" + std::string(name) + "'");
}

ModalDimension modal_dimension(const ReferenceDataset& dataset) {
    std::map<std::size_t, std::size_t> counts;
    for (const Cycle& cycle : dataset.cycles()) ++counts[cycle.length()];
    ModalDimension mode;
    // Ascending key order plus strict '>' keeps the smallest length on ties.
    for (const auto& [len, n] : counts) {
        if (n > mode.count) mode = {len, n};
    }
    return mode;
}

Series average_reference(const ReferenceDataset& dataset, std::size_t channel) {
    if (channel >= dataset.channel_count()) throw InvalidInput("channel index out of range");
    const ModalDimension mode = modal_dimension(dataset);
    std::vector<double> sum(mode.length, 0.0);
    for (const Cycle& cycle : dataset.cycles()) {
        if (cycle.length() != mode.length) continue;
        const Series& s = cycle.channels[channel];
        for (std::size_t i = 0; i < mode.length; ++i) sum[i] += s[i];
    }
    for (double& v : sum) v /= static_cast<double>(mode.count);
    return Series(std::move(sum));
}

Series average_reference(const ReferenceDataset& dataset, std::string_view channel) {
    return average_reference(dataset, dataset.channel_index(channel));
}

std::vector<ChannelBounds> channel_bounds(const ReferenceDataset& dataset) {
    const std::size_t modal = modal_dimension(dataset).length;
    std::vector<ChannelBounds> out(dataset.channel_count());
    for (std::size_t c = 0; c < out.size(); ++c) {
        ChannelBounds& b = out[c];
        const Series& first = dataset.cycles().front().channels[c];
        b.global_min = b.global_max = first[0];
        b.env_min.assign(modal, 0.0);
        b.env_max.assign(modal, 0.0);
        bool env_seeded = false;
        for (const Cycle& cycle : dataset.cycles()) {
            const Series& s = cycle.channels[c];
            for (double v : s) {
                b.global_min = std::min(b.global_min, v);
                b.global_max = std::max(b.global_max, v);
            }
            if (cycle.length() != modal) continue;
            for (std::size_t i = 0; i < modal; ++i) {
                if (!env_seeded) {
                    b.env_min[i] = b.env_max[i] = s[i];
                } else {
                    b.env_min[i] = std::min(b.env_min[i], s[i]);
                    b.env_max[i] = std::max(b.env_max[i], s[i]);
                }
            }
            env_seeded = true;
        }
    }
    return out;
}

namespace {

std::size_t argmax(const std::vector<double>& q) {
    return static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
}

}  // namespace

Series resize_series(const Series& s, std::size_t target_len, DimRange range, ResizeMode mode,
                     std::span<const double> quality, Rng& rng) {
    if (!range.contains(target_len))
        throw InvalidInput("target length " + std::to_string(target_len) + " outside [" +
                           std::to_string(range.min) + ", " + std::to_string(range.max) + "]");
    const bool worst = mode == ResizeMode::worst;
    if (worst && quality.size() != s.size())
        throw InvalidInput("worst-mode resize needs one quality value per dimension");

    std::vector<double> values = s.vector();
    std::vector<double> q;
    if (worst) q.assign(quality.begin(), quality.end());

    while (values.size() > target_len) {
        const std::size_t idx = worst ? argmax(q) : uniform_index(rng, 0, values.size() - 1);
        values.erase(values.begin() + static_cast<std::ptrdiff_t>(idx));
        if (worst) q.erase(q.begin() + static_cast<std::ptrdiff_t>(idx));
    }

    while (values.size() < target_len) {
        const std::size_t n = values.size();
        std::size_t left = 0;  // insert between left and left + 1
        if (n == 1) {
            left = 0;
        } else if (!worst) {
            left = uniform_index(rng, 0, n - 2);
        } else {
            const std::size_t w = argmax(q);
            if (w == 0) {
                left = 0;
            } else if (w == n - 1) {
                left = n - 2;
            } else {
                left = q[w - 1] >= q[w + 1] ? w - 1 : w;
            }
        }
        const std::size_t right = n == 1 ? 0 : left + 1;
        const double mid = 0.5 * (values[left] + values[right]);
        values.insert(values.begin() + static_cast<std::ptrdiff_t>(left + 1), mid);
        if (worst) {
            const double mq = 0.5 * (q[left] + q[right]);
            q.insert(q.begin() + static_cast<std::ptrdiff_t>(left + 1), mq);
        }
    }
    return Series(std::move(values));
}

std::vector<Individual> init_population(const ReferenceDataset& dataset, std::size_t population_size,
                                        std::uint64_t seed) {
    if (population_size < 4) throw ConfigError("population size must be at least 4");

    const std::size_t channels = dataset.channel_count();
    const std::vector<ChannelBounds> bounds = channel_bounds(dataset);
    std::vector<Series> reference;
    reference.reserve(channels);
    for (std::size_t c = 0; c < channels; ++c) reference.push_back(average_reference(dataset, c));
    const DimRange range = dataset.dim_range();

    std::vector<Individual> population(population_size);
    for (std::size_t k = 0; k < population_size; ++k) {
        Rng rng = substream(seed, 0, k);
        Individual& ind = population[k];
        ind.birth = k;
        ind.channels.reserve(channels);
        for (std::size_t c = 0; c < channels; ++c) {
            const ChannelBounds& b = bounds[c];
            const Series& avg = reference[c];
            std::vector<double> values(avg.size());
            for (std::size_t i = 0; i < avg.size(); ++i) {
                const double half = 0.5 * (b.env_max[i] - b.env_min[i]);
                const double v = avg[i] + half * (2.0 * uniform01(rng) - 1.0);
                values[i] = std::clamp(v, b.global_min, b.global_max);
            }
            const std::size_t len = uniform_index(rng, range.min, range.max);
            Series resized = resize_series(Series(std::move(values)), len, range, ResizeMode::random, {}, rng);
            ind.channels.push_back({dataset.channel_names()[c], std::move(resized)});
        }
    }
    return population;
}

}  // namespace ddw
