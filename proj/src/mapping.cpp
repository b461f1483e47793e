#include "ddw/mapping.hpp"

#include <algorithm>

#include "ddw/error.hpp"

namespace ddw {

namespace {

inline double sq(double x) noexcept { return x * x; }

// Fills `cost` (row-major, |a| x |b|) with cumulative DTW costs.
void accumulate(std::span<const double> a, std::span<const double> b, std::vector<double>& cost) {
    const std::size_t rows = a.size();
    const std::size_t cols = b.size();
    cost.resize(rows * cols);
    double* c = cost.data();

    c[0] = sq(a[0] - b[0]);
    for (std::size_t j = 1; j < cols; ++j) c[j] = c[j - 1] + sq(a[0] - b[j]);

    for (std::size_t i = 1; i < rows; ++i) {
        const double ai = a[i];
        double* row = c + i * cols;
        const double* prev = row - cols;
        double left = prev[0] + sq(ai - b[0]);
        row[0] = left;
        for (std::size_t j = 1; j < cols; ++j) {
            const double best = std::min({prev[j - 1], prev[j], left});
            left = best + sq(ai - b[j]);
            row[j] = left;
        }
    }
}

// Walks back from the end cell; returns the path in forward order.
WarpingPath backtrack(std::size_t rows, std::size_t cols, const std::vector<double>& cost) {
    WarpingPath path;
    path.reserve(rows + cols);
    std::size_t i = rows - 1;
    std::size_t j = cols - 1;
    path.emplace_back(i, j);
    while (i != 0 || j != 0) {
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else {
            const double diag = cost[(i - 1) * cols + (j - 1)];
            const double up = cost[(i - 1) * cols + j];
            const double left = cost[i * cols + (j - 1)];
            if (diag <= up && diag <= left) {
                --i;
                --j;
            } else if (up <= left) {
                --i;
            } else {
                --j;
            }
        }
        path.emplace_back(i, j);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

thread_local std::vector<double> tl_cost;

}  // namespace

std::size_t closest_in_range(std::span<const double> b, IndexRange range, double target) noexcept {
    std::size_t best = range.first;
    double best_d = sq(b[range.first] - target);
    for (std::size_t j = range.first + 1; j <= range.last; ++j) {
        const double d = sq(b[j] - target);
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return best;
}

MappingResult map_series(std::span<const double> a, std::span<const double> b) {
    require_valid_series(a);
    require_valid_series(b);

    MappingResult out;
    out.per_dim.resize(a.size());
    out.dirs.resize(a.size());

    if (a.size() == b.size()) {
        double total = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = sq(a[i] - b[i]);
            out.per_dim[i] = d;
            out.dirs[i] = {i, i};
            total += d;
        }
        out.total = total;
        return out;
    }

    accumulate(a, b, tl_cost);
    out.total = tl_cost.back();

    const WarpingPath path = backtrack(a.size(), b.size(), tl_cost);
    // Path is sorted by i then j, so each dirs[i] is first-seen .. last-seen.
    std::size_t prev_i = a.size();
    for (const auto& [i, j] : path) {
        if (i != prev_i) {
            out.dirs[i] = {j, j};
            prev_i = i;
        } else {
            out.dirs[i].last = j;
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const IndexRange r = out.dirs[i];
        double best = sq(a[i] - b[r.first]);
        for (std::size_t j = r.first + 1; j <= r.last; ++j) best = std::min(best, sq(a[i] - b[j]));
        out.per_dim[i] = best;
    }
    return out;
}

MappingResult map_series(const Series& a, const Series& b) {
    return map_series(a.values(), b.values());
}

WarpingPath dtw_best_route(std::span<const double> a, std::span<const double> b) {
    require_valid_series(a);
    require_valid_series(b);
    if (a.size() == b.size())
        throw InvalidInput("dtw_best_route requires series of different lengths");
    accumulate(a, b, tl_cost);
    return backtrack(a.size(), b.size(), tl_cost);
}

WarpingPath dtw_best_route(const Series& a, const Series& b) {
    return dtw_best_route(a.values(), b.values());
}

}  // namespace ddw
