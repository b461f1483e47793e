#include "ddw/series.hpp"

#include <cmath>
#include <string>

#include "ddw/error.hpp"

namespace ddw {

void require_valid_series(std::span<const double> values) {
    if (values.empty()) throw InvalidInput("series must not be empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw InvalidInput("series value at index " + std::to_string(i) + " is not finite");
    }
}

Series::Series(std::vector<double> values) : values_(std::move(values)) {
    require_valid_series(values_);
}

}  // namespace ddw
