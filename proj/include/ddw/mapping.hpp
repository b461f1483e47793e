#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ddw/series.hpp"

namespace ddw {

/// Inclusive, contiguous run of indices into the second series of a mapping.
/// Warping paths are monotone, so the indices one element of A is matched
/// with always form such a run.
struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t size() const noexcept { return last - first + 1; }
    bool contains(std::size_t j) const noexcept { return j >= first && j <= last; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Cross-dimensional mapping of series A onto series B.
///
/// `total` is the accumulated squared-difference cost of the alignment,
/// `per_dim[i]` the smallest squared difference between a_i and any b_j it
/// is matched with, and `dirs[i]` the indices of B matched with a_i.
struct MappingResult {
    double total = 0.0;
    std::vector<double> per_dim;
    std::vector<IndexRange> dirs;
};

using WarpingPath = std::vector<std::pair<std::size_t, std::size_t>>;

/// Maps `a` onto `b`. Equal lengths use the elementwise alignment
/// (sum of squared differences, dirs[i] = {i}); unequal lengths run full
/// unconstrained DTW with squared local cost and derive dirs from the
/// backtracked route.
MappingResult map_series(std::span<const double> a, std::span<const double> b);
MappingResult map_series(const Series& a, const Series& b);

/// Backtracked minimal-cost warping path from (0,0) to (|a|-1,|b|-1).
/// Cost ties prefer the diagonal predecessor, then (i-1,j), then (i,j-1).
/// Throws InvalidInput when the lengths are equal.
WarpingPath dtw_best_route(std::span<const double> a, std::span<const double> b);
WarpingPath dtw_best_route(const Series& a, const Series& b);

/// Index inside `range` whose value in `b` is closest (squared distance) to
/// `target`; the first such index on ties.
std::size_t closest_in_range(std::span<const double> b, IndexRange range, double target) noexcept;

}  // namespace ddw
