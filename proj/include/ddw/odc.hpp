#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ddw/dataset.hpp"
#include "ddw/fitness.hpp"
#include "ddw/individual.hpp"

namespace ddw {

/// Which source supplied one output dimension of a merge, and the two
/// quality values that were compared.
struct MergeChoice {
    std::size_t channel = 0;
    std::size_t dim = 0;
    bool took_other = false;
    std::size_t other_index = 0;  // matched index in the other individual
    double chosen_quality = 0.0;
    double rejected_quality = 0.0;
};

struct MergeOutcome {
    Individual solution;  // unevaluated, base's channel lengths
    std::vector<MergeChoice> choices;
};

/// Per-dimension merge of `other` into `base` using the cached quality of
/// both. For dimension i of each base channel the matched index j* is the
/// member of map_series(base_c, other_c).dirs[i] with the smallest other
/// quality; base keeps its value when its quality is <= other's at j*.
///
/// Throws InvalidState when either quality cache is missing and
/// InvalidInput when the channel names differ.
MergeOutcome odc_merge(const Individual& base, const Individual& other);

/// Optimal Dimension Collection over Part A (sorted ascending by fitness):
/// folds odc_merge over the members in order, starting from part_a[0] and
/// re-evaluating the running solution after every merge. The result is
/// evaluated. Throws InvalidInput for an empty or unsorted Part A.
Individual odc_collect(std::span<const Individual> part_a, const ReferenceDataset& dataset);

/// Blackbox replacement for ODC: greedy single-coordinate probes from each
/// other Part A member, kept only on strict improvement. The result is
/// evaluated and never worse than part_a[0].
Individual odc_probe_blackbox(std::span<const Individual> part_a, const Objective& objective);

enum class OdcClass { best, better, worst };

/// Best: below every Part A fitness. Better: below at least one. Worst otherwise.
OdcClass classify_odc(double solution_fitness, std::span<const Individual> part_a);

std::string_view to_string(OdcClass c) noexcept;

}  // namespace ddw
