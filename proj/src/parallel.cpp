#include "ddw/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ddw {

int default_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 0) threads = default_threads();
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

void evaluate_serial(std::span<Individual> population, const Evaluator& evaluator) {
    for (Individual& ind : population) ind.report = evaluator.evaluate(ind);
}

void evaluate_parallel(std::span<Individual> population, const Evaluator& evaluator, int threads) {
    parallel_for(population.size(), threads == 1 ? 2 : threads,
                 [&](std::size_t i) { population[i].report = evaluator.evaluate(population[i]); });
}

void evaluate_population(std::span<Individual> population, const Evaluator& evaluator, int threads) {
    if (threads == 1) {
        evaluate_serial(population, evaluator);
    } else {
        evaluate_parallel(population, evaluator, threads);
    }
}

}  // namespace ddw
