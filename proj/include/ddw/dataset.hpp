#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddw/individual.hpp"
#include "ddw/random.hpp"
#include "ddw/series.hpp"

namespace ddw {

/// Admissible dimension counts [min, max] for template channels.
struct DimRange {
    std::size_t min = 1;
    std::size_t max = 1;

    bool contains(std::size_t n) const noexcept { return n >= min && n <= max; }
    friend bool operator==(const DimRange&, const DimRange&) = default;
};

/// One recorded cycle; `channels` follows the owning dataset's channel order
/// and every member has the same length.
struct Cycle {
    std::int64_t id = 0;
    std::vector<Series> channels;

    std::size_t length() const noexcept { return channels.empty() ? 0 : channels.front().size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Immutable set of reference cycles sharing the same channel names.
class ReferenceDataset {
public:
    /// Throws ValidationError for an empty cycle list ("no cycles"), a cycle
    /// missing channels, or a cycle whose channels differ in length.
    ReferenceDataset(std::vector<std::string> channel_names, std::vector<Cycle> cycles);

    const std::vector<std::string>& channel_names() const noexcept { return names_; }
    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
    std::size_t size() const noexcept { return cycles_.size(); }
    std::size_t channel_count() const noexcept { return names_.size(); }
    DimRange dim_range() const noexcept { return range_; }

    /// Throws InvalidInput for an unknown name.
    std::size_t channel_index(std::string_view name) const;

    friend bool operator==(const ReferenceDataset&, const ReferenceDataset&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Cycle> cycles_;
    DimRange range_;
};

struct ModalDimension {
    std::size_t length = 0;
    std::size_t count = 0;
};

/// Per-channel value envelope. global_* spans every sample of the channel;
/// env_* is per dimension over the modal-length cycles.
struct ChannelBounds {
    double global_min = 0.0;
    double global_max = 0.0;
    std::vector<double> env_min;
    std::vector<double> env_max;

    ValueLimits limits() const { return {global_min, global_max, {}, {}}; }
};

enum class ResizeMode { random, worst };

/// Most frequent cycle length and its multiplicity; ties go to the
/// smallest length.
ModalDimension modal_dimension(const ReferenceDataset& dataset);

/// Dimension-wise mean of the channel over cycles of the modal length.
Series average_reference(const ReferenceDataset& dataset, std::size_t channel);
Series average_reference(const ReferenceDataset& dataset, std::string_view channel);

std::vector<ChannelBounds> channel_bounds(const ReferenceDataset& dataset);

/// Changes the length of `s` to `target_len` one element at a time.
///
/// Shrinking deletes an element per step: a uniformly chosen one in random
/// mode, the one with the largest quality in worst mode. Growing inserts the
/// midpoint of two adjacent values: a uniformly chosen pair in random mode,
/// in worst mode the pair formed by the worst element and its worse
/// neighbour. Inserted elements carry the mean quality of their neighbours.
///
/// Throws InvalidInput when `target_len` is outside `range` or, in worst
/// mode, when `quality` does not match `s`.
Series resize_series(const Series& s, std::size_t target_len, DimRange range, ResizeMode mode,
                     std::span<const double> quality, Rng& rng);

/// Builds `population_size` individuals around the average reference
/// (modal-length mean plus a zero-mean uniform perturbation spanning the
/// per-dimension envelope, clamped to the channel range), each channel then
/// resized to a uniformly drawn length in the dataset's range. Individual k
/// draws from substream (seed, 0, k) and gets birth id k.
///
/// Throws ConfigError when population_size < 4.
std::vector<Individual> init_population(const ReferenceDataset& dataset, std::size_t population_size,
                                        std::uint64_t seed);

}  // namespace ddw
