#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "ddw/fitness.hpp"
#include "ddw/individual.hpp"

namespace ddw {

/// Number of workers used when a caller asks for 0 (OpenMP default, or 1
/// when built without OpenMP).
int default_threads() noexcept;

/// Runs body(i) for i in [0, n). threads == 1 runs a plain loop; otherwise
/// OpenMP with dynamic scheduling. Each index must write only its own
/// output slot. The first exception (lowest index) is rethrown after the
/// loop.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

/// Reference kernel: evaluates every individual in order on the calling thread.
void evaluate_serial(std::span<Individual> population, const Evaluator& evaluator);

/// OpenMP kernel; results are identical to evaluate_serial because each
/// evaluation is a pure function of its individual.
void evaluate_parallel(std::span<Individual> population, const Evaluator& evaluator, int threads = 0);

/// Dispatches to the serial kernel for threads == 1, the OpenMP one otherwise.
void evaluate_population(std::span<Individual> population, const Evaluator& evaluator, int threads);

}  // namespace ddw
