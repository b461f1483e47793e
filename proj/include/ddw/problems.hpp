#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddw/fitness.hpp"

namespace ddw {

/// One of the 23 classical test functions F1..F23.
struct BenchmarkProblem {
    int id = 1;
    std::string name;
    std::size_t dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    double known_optimum = 0.0;
    std::vector<double> optimizer;  // a catalogued global minimizer

    Objective objective() const;
};

constexpr std::size_t kDefaultBenchmarkDim = 30;

/// "F14" or "14" -> 14. Throws InvalidInput for anything outside F1..F23.
int parse_benchmark_id(std::string_view text);

/// Whether the function's dimensionality is fixed by its definition (F14..F23).
bool has_fixed_dim(int id);

/// F1..F13 take `dim` (default 30); F14..F23 have a fixed dimensionality and
/// reject a mismatching explicit `dim`.
BenchmarkProblem make_benchmark(int id, std::optional<std::size_t> dim = std::nullopt);

/// Standard value of function `id` at `point`. F1..F13 accept any length
/// (F5 needs at least 2). Throws InvalidInput on a wrong length or a point
/// outside the function's box.
double eval_benchmark(int id, std::span<const double> point);

/// Catalogued global minimum. F8 scales with the dimension.
double known_optimum(int id, std::size_t dim = kDefaultBenchmarkDim);

/// The deterministic noise term of F7 at `point`, uniform in [0, 1).
double quartic_noise(std::span<const double> point) noexcept;

}  // namespace ddw
