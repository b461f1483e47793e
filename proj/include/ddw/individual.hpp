#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddw/series.hpp"

namespace ddw {

struct Channel {
    std::string name;
    Series series;

    friend bool operator==(const Channel&, const Channel&) = default;
};

/// Result of evaluating an individual. `per_dim_quality[c]` lines up with
/// channel c of the individual and holds, per dimension, the mean over
/// reference cycles of the minimum mapped distance. Blackbox evaluation
/// leaves it empty.
struct FitnessReport {
    double fitness = 0.0;
    std::vector<std::vector<double>> per_dim_quality;

    bool has_quality() const noexcept { return !per_dim_quality.empty(); }
    friend bool operator==(const FitnessReport&, const FitnessReport&) = default;
};

/// Candidate solution: named channels whose lengths may differ from each
/// other. `birth` is a creation counter used to break fitness ties.
struct Individual {
    std::vector<Channel> channels;
    std::optional<FitnessReport> report;
    std::uint64_t birth = 0;

    std::size_t channel_count() const noexcept { return channels.size(); }
    const Series& series(std::size_t c) const { return channels.at(c).series; }
    const Series& series(std::string_view name) const;

    bool evaluated() const noexcept { return report.has_value(); }
    /// Throws InvalidState when the individual has not been evaluated.
    double fitness() const;
    /// Throws InvalidState unless evaluated in template mode.
    const std::vector<double>& quality(std::size_t c) const;

    /// Same channel names and values; fitness caches are ignored.
    bool same_values(const Individual& other) const noexcept { return channels == other.channels; }
};

/// Clamp range for the values of one channel. Template channels have one
/// range for every dimension; fixed-length problems may carry per-coordinate
/// ranges in `coord_lo`/`coord_hi`.
struct ValueLimits {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> coord_lo;
    std::vector<double> coord_hi;

    double lower(std::size_t j) const noexcept { return j < coord_lo.size() ? coord_lo[j] : lo; }
    double upper(std::size_t j) const noexcept { return j < coord_hi.size() ? coord_hi[j] : hi; }
    double clamp(std::size_t j, double v) const noexcept {
        const double l = lower(j), h = upper(j);
        return v < l ? l : (v > h ? h : v);
    }
};

}  // namespace ddw
