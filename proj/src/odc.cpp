#include "ddw/odc.hpp"

#include "ddw/error.hpp"
#include "ddw/mapping.hpp"

namespace ddw {

namespace {

void require_sorted(std::span<const Individual> part_a) {
    if (part_a.empty()) throw InvalidInput("Part A must not be empty");
    for (std::size_t k = 1; k < part_a.size(); ++k)
        if (part_a[k].fitness() < part_a[k - 1].fitness())
            throw InvalidInput("Part A must be sorted ascending by fitness");
}

}  // namespace

MergeOutcome odc_merge(const Individual& base, const Individual& other) {
    if (base.channel_count() != other.channel_count())
        throw InvalidInput("merge partners have different channel counts");

    MergeOutcome out;
    out.solution.birth = base.birth;
    out.solution.channels.reserve(base.channel_count());
    for (std::size_t c = 0; c < base.channel_count(); ++c) {
        const Channel& bc = base.channels[c];
        const Channel& oc = other.channels[c];
        if (bc.name != oc.name) throw InvalidInput("merge partners have different channel names");
        const std::vector<double>& bq = base.quality(c);
        const std::vector<double>& oq = other.quality(c);
        if (bq.size() != bc.series.size() || oq.size() != oc.series.size())
            throw InvalidState("quality cache does not match channel '" + bc.name + "'");

        const MappingResult m = map_series(bc.series, oc.series);
        std::vector<double> merged(bc.series.size());
        for (std::size_t i = 0; i < merged.size(); ++i) {
            const IndexRange r = m.dirs[i];
            std::size_t j = r.first;
            for (std::size_t k = r.first + 1; k <= r.last; ++k)
                if (oq[k] < oq[j]) j = k;

            MergeChoice choice{c, i, false, j, bq[i], oq[j]};
            if (bq[i] <= oq[j]) {
                merged[i] = bc.series[i];
            } else {
                merged[i] = oc.series[j];
                choice.took_other = true;
                std::swap(choice.chosen_quality, choice.rejected_quality);
            }
            out.choices.push_back(choice);
        }
        out.solution.channels.push_back({bc.name, Series(std::move(merged))});
    }
    return out;
}

Individual odc_collect(std::span<const Individual> part_a, const ReferenceDataset& dataset) {
    require_sorted(part_a);
    Individual solution = part_a.front();
    for (std::size_t k = 1; k < part_a.size(); ++k) {
        const std::uint64_t birth = solution.birth;
        solution = odc_merge(solution, part_a[k]).solution;
        solution.birth = birth;
        solution.report = template_fitness(solution, dataset);
    }
    return solution;
}

Individual odc_probe_blackbox(std::span<const Individual> part_a, const Objective& objective) {
    require_sorted(part_a);
    Individual start = part_a.front();
    if (!start.evaluated()) start.report = blackbox_fitness(start, objective);

    std::vector<double> point = start.series(0).vector();
    if (point.size() != objective.dim) throw InvalidInput("Part A point does not match the objective dimension");
    double value = objective(point);
    for (std::size_t k = 1; k < part_a.size(); ++k) {
        const Series& donor = part_a[k].series(0);
        if (donor.size() != point.size()) throw InvalidInput("Part A members must share one length in blackbox mode");
        for (std::size_t j = 0; j < point.size(); ++j) {
            const double saved = point[j];
            if (donor[j] == saved) continue;
            point[j] = donor[j];
            const double trial = objective(point);
            if (trial < value) {
                value = trial;
            } else {
                point[j] = saved;
            }
        }
    }

    Individual out;
    out.birth = start.birth;
    out.channels.push_back({start.channels.front().name, Series(std::move(point))});
    out.report = FitnessReport{value, {}};
    return out;
}

OdcClass classify_odc(double solution_fitness, std::span<const Individual> part_a) {
    bool below_all = true;
    bool below_any = false;
    for (const Individual& ind : part_a) {
        if (solution_fitness < ind.fitness()) {
            below_any = true;
        } else {
            below_all = false;
        }
    }
    if (below_all && below_any) return OdcClass::best;
    return below_any ? OdcClass::better : OdcClass::worst;
}

std::string_view to_string(OdcClass c) noexcept {
    switch (c) {
        case OdcClass::best: return "best";
        case OdcClass::better: return "better";
        case OdcClass::worst: return "worst";
    }
    return "worst";
}

}  // namespace ddw
