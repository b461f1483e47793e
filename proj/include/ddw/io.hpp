#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ddw/dataset.hpp"
#include "ddw/engine.hpp"

namespace ddw {

// --- gait CSV --------------------------------------------------------------
//
// Long format, one sample per row:
//
//   cycle_id,channel,sample_index,value
//   0,back,0,4.25
//   ...
//
// Cycles and channels keep their order of first appearance.

inline constexpr const char* kDatasetHeader = "cycle_id,channel,sample_index,value";

/// Throws FormatError (missing header), ParseError (bad field, with line
/// number), ValidationError (gaps, length mismatch naming the cycle, "no
/// cycles"), IoError (unreadable file).
ReferenceDataset read_dataset(std::istream& in);
ReferenceDataset load_dataset(const std::filesystem::path& path);

void write_dataset(const ReferenceDataset& dataset, std::ostream& out);
void save_dataset(const ReferenceDataset& dataset, const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

// --- synthetic gait ---------------------------------------------------------

struct SynthParams {
    std::size_t n_cycles = 80;
    std::vector<std::string> channels{"back", "l_thigh", "r_thigh", "l_shank", "r_shank"};
    std::size_t base_length = 60;
    std::size_t length_jitter = 1;
    double noise_sd = 2.0;
    std::uint64_t seed = 0;
};

struct SynthResult {
    ReferenceDataset dataset;
    Individual planted;  // the noiseless templates at base_length
};

/// Plants one two-sinusoid periodic template per channel, resamples it to
/// base_length + U{-jitter..jitter} samples per cycle and adds N(0, noise_sd)
/// noise. Throws ConfigError for invalid parameters.
SynthResult synth_dataset(const SynthParams& params);

// --- run records ------------------------------------------------------------

nlohmann::ordered_json record_to_json(const RunRecord& record);
/// Inverse of record_to_json for every field it writes.
RunRecord record_from_json(const nlohmann::ordered_json& doc);

/// Writes `<prefix>.json` (structured record) and `<prefix>.csv`
/// (iteration,best_fitness,mean_fitness,std_fitness). Throws IoError.
void write_results(const RunRecord& record, const std::string& prefix);
RunRecord read_record(const std::filesystem::path& json_path);

/// Per-iteration Best/Better/Worst rates over repeated DDW runs.
struct OdcRates {
    std::vector<double> best;
    std::vector<double> better;
    std::vector<double> worst;
    double mean_best = 0.0;
    double mean_better = 0.0;
    double mean_worst = 0.0;
};

/// Iteration i's rate is averaged over the runs that reached iteration i.
OdcRates odc_rates(const std::vector<RunRecord>& runs);

/// Writes `<prefix>.csv` (iteration,best_rate,better_rate,worst_rate) and
/// `<prefix>.json` (overall means, seeds, final fitness per run).
void write_odc_stats(const std::vector<RunRecord>& runs, const std::string& prefix);

}  // namespace ddw
