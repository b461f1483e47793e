#include "ddw/individual.hpp"

#include "ddw/error.hpp"

namespace ddw {

const Series& Individual::series(std::string_view name) const {
    for (const Channel& ch : channels)
        if (ch.name == name) return ch.series;
    throw InvalidInput("individual has no channel '" + std::string(name) + "'");
}

double Individual::fitness() const {
    if (!report) throw InvalidState("individual has not been evaluated");
    return report->fitness;
}

const std::vector<double>& Individual::quality(std::size_t c) const {
    if (!report || !report->has_quality())
        throw InvalidState("individual has no per-dimension quality cache");
    return report->per_dim_quality.at(c);
}

}  // namespace ddw
