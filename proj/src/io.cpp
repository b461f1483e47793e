#include "ddw/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "ddw/error.hpp"

namespace ddw {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

ReferenceDataset read_dataset(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    // Header: first nonblank line.
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty()) continue;
        const auto fields = split_commas(t);
        if (fields.size() != 4 || fields[0] != "cycle_id" || fields[1] != "channel" || fields[2] != "sample_index" ||
            fields[3] != "value")
            throw FormatError("line " + std::to_string(line_no) + ": expected header '" + kDatasetHeader + "'");
        have_header = true;
        break;
    }
    if (!have_header) throw FormatError(std::string("missing header '") + kDatasetHeader + "'");

    struct Samples {
        std::map<std::size_t, double> by_index;
    };
    std::vector<std::string> channel_order;
    std::vector<std::int64_t> cycle_order;
    std::map<std::int64_t, std::map<std::string, Samples>> data;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty()) continue;
        const auto fields = split_commas(t);
        if (fields.size() != 4)
            throw ParseError(line_no, "expected 4 fields, found " + std::to_string(fields.size()));
        const auto cycle_id = parse_number<std::int64_t>(fields[0], line_no, "cycle_id");
        const std::string channel(fields[1]);
        if (channel.empty()) throw ParseError(line_no, "empty channel name");
        const auto index = parse_number<std::size_t>(fields[2], line_no, "sample_index");
        const auto value = parse_number<double>(fields[3], line_no, "value");
        if (!std::isfinite(value)) throw ParseError(line_no, "value is not finite");

        if (std::find(channel_order.begin(), channel_order.end(), channel) == channel_order.end())
            channel_order.push_back(channel);
        auto [cycle_it, new_cycle] = data.try_emplace(cycle_id);
        if (new_cycle) cycle_order.push_back(cycle_id);
        auto& samples = cycle_it->second[channel].by_index;
        if (!samples.emplace(index, value).second)
            throw ValidationError("cycle " + std::to_string(cycle_id) + ": channel '" + channel +
                                  "' repeats sample_index " + std::to_string(index) + " (line " +
                                  std::to_string(line_no) + ")");
    }
    if (cycle_order.empty()) throw ValidationError("no cycles");

    std::vector<Cycle> cycles;
    cycles.reserve(cycle_order.size());
    for (std::int64_t id : cycle_order) {
        const auto& channels = data.at(id);
        Cycle cycle;
        cycle.id = id;
        for (const std::string& name : channel_order) {
            const auto it = channels.find(name);
            if (it == channels.end())
                throw ValidationError("cycle " + std::to_string(id) + ": missing channel '" + name + "'");
            std::vector<double> values;
            values.reserve(it->second.by_index.size());
            std::size_t expected = 0;
            for (const auto& [idx, v] : it->second.by_index) {
                if (idx != expected)
                    throw ValidationError("cycle " + std::to_string(id) + ": channel '" + name +
                                          "' is missing sample_index " + std::to_string(expected));
                values.push_back(v);
                ++expected;
            }
            cycle.channels.emplace_back(std::move(values));
        }
        cycles.push_back(std::move(cycle));
    }
    return ReferenceDataset(std::move(channel_order), std::move(cycles));
}

ReferenceDataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset '" + path.string() + "'");
    return read_dataset(in);
}

void write_dataset(const ReferenceDataset& dataset, std::ostream& out) {
    for (const std::string& name : dataset.channel_names())
        if (name.find_first_of(",\n\r") != std::string::npos)
            throw InvalidInput("channel name '" + name + "' cannot be written to CSV");
    out << kDatasetHeader << '\n';
    for (const Cycle& cycle : dataset.cycles()) {
        for (std::size_t c = 0; c < cycle.channels.size(); ++c) {
            const Series& s = cycle.channels[c];
            for (std::size_t i = 0; i < s.size(); ++i)
                out << cycle.id << ',' << dataset.channel_names()[c] << ',' << i << ',' << format_double(s[i]) << '\n';
        }
    }
}

void save_dataset(const ReferenceDataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write dataset '" + path.string() + "'");
    write_dataset(dataset, out);
    if (!out) throw IoError("failed writing dataset '" + path.string() + "'");
}

SynthResult synth_dataset(const SynthParams& params) {
    if (params.n_cycles == 0) throw ConfigError("synthetic dataset needs at least one cycle");
    if (params.channels.empty()) throw ConfigError("synthetic dataset needs at least one channel");
    if (params.base_length < params.length_jitter + 2) throw ConfigError("base_length - length_jitter must be >= 2");
    if (!(params.noise_sd >= 0.0) || !std::isfinite(params.noise_sd)) throw ConfigError("noise_sd must be >= 0");

    // Channel c: offset + a1 sin(2 pi t + phase) + a2 sin(4 pi t + 2 phase + 0.7), t in [0, 1).
    struct Shape {
        double offset, a1, a2, phase;
    };
    std::vector<Shape> shapes;
    for (std::size_t c = 0; c < params.channels.size(); ++c) {
        const double k = static_cast<double>(c);
        shapes.push_back({10.0 * static_cast<double>(c % 3) - 10.0, 20.0 + 5.0 * k, 6.0, 0.9 * k});
    }
    const auto sample = [&](std::size_t c, std::size_t i, std::size_t len) {
        const Shape& s = shapes[c];
        const double t = static_cast<double>(i) / static_cast<double>(len);
        constexpr double two_pi = 2.0 * std::numbers::pi;
        return s.offset + s.a1 * std::sin(two_pi * t + s.phase) + s.a2 * std::sin(2.0 * two_pi * t + 2.0 * s.phase + 0.7);
    };

    Rng rng(mix64(params.seed));
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<Cycle> cycles;
    cycles.reserve(params.n_cycles);
    for (std::size_t n = 0; n < params.n_cycles; ++n) {
        const std::size_t len = params.base_length - params.length_jitter +
                                uniform_index(rng, 0, 2 * params.length_jitter);
        Cycle cycle;
        cycle.id = static_cast<std::int64_t>(n);
        for (std::size_t c = 0; c < params.channels.size(); ++c) {
            std::vector<double> values(len);
            for (std::size_t i = 0; i < len; ++i) values[i] = sample(c, i, len) + params.noise_sd * noise(rng);
            cycle.channels.emplace_back(std::move(values));
        }
        cycles.push_back(std::move(cycle));
    }

    Individual planted;
    for (std::size_t c = 0; c < params.channels.size(); ++c) {
        std::vector<double> values(params.base_length);
        for (std::size_t i = 0; i < params.base_length; ++i) values[i] = sample(c, i, params.base_length);
        planted.channels.push_back({params.channels[c], Series(std::move(values))});
    }
    return {ReferenceDataset(params.channels, std::move(cycles)), std::move(planted)};
}

nlohmann::ordered_json record_to_json(const RunRecord& record) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["algorithm"] = record.algorithm;
    doc["mode"] = record.mode;
    doc["problem"] = record.problem;
    doc["seed"] = record.seed;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : record.parameters) params[k] = v;
    doc["config"] = params;

    ordered_json best;
    best["fitness"] = record.best.fitness();
    ordered_json channels = ordered_json::array();
    for (const Channel& ch : record.best.channels) channels.push_back({{"name", ch.name}, {"values", ch.series.vector()}});
    best["channels"] = channels;
    if (record.best.report && record.best.report->has_quality()) best["per_dim_quality"] = record.best.report->per_dim_quality;
    doc["final_best"] = best;

    const OdcCounts counts = record.odc_counts();
    if (counts.total() > 0) {
        const double n = static_cast<double>(counts.total());
        doc["odc"] = {{"best", counts.best},
                      {"better", counts.better},
                      {"worst", counts.worst},
                      {"best_rate", static_cast<double>(counts.best) / n},
                      {"better_rate", static_cast<double>(counts.better) / n},
                      {"worst_rate", static_cast<double>(counts.worst) / n}};
    }

    ordered_json history = ordered_json::array();
    for (const IterationStats& s : record.history) {
        ordered_json row{{"iteration", s.iteration},
                         {"best_fitness", s.best_fitness},
                         {"mean_fitness", s.mean_fitness},
                         {"std_fitness", s.std_fitness}};
        if (s.odc) row["odc"] = std::string(to_string(*s.odc));
        if (s.odc_fitness) row["odc_fitness"] = *s.odc_fitness;
        history.push_back(row);
    }
    doc["history"] = history;
    doc["wall_time_s"] = record.wall_time_s;
    return doc;
}

RunRecord record_from_json(const nlohmann::ordered_json& doc) {
    try {
        RunRecord r;
        r.algorithm = doc.at("algorithm").get<std::string>();
        r.mode = doc.at("mode").get<std::string>();
        r.problem = doc.at("problem").get<std::string>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        for (const auto& [k, v] : doc.at("config").items()) r.parameters.emplace_back(k, v.get<double>());

        const auto& best = doc.at("final_best");
        for (const auto& ch : best.at("channels"))
            r.best.channels.push_back({ch.at("name").get<std::string>(), Series(ch.at("values").get<std::vector<double>>())});
        FitnessReport report;
        report.fitness = best.at("fitness").get<double>();
        if (best.contains("per_dim_quality"))
            report.per_dim_quality = best.at("per_dim_quality").get<std::vector<std::vector<double>>>();
        r.best.report = report;

        for (const auto& row : doc.at("history")) {
            IterationStats s;
            s.iteration = row.at("iteration").get<std::size_t>();
            s.best_fitness = row.at("best_fitness").get<double>();
            s.mean_fitness = row.at("mean_fitness").get<double>();
            s.std_fitness = row.at("std_fitness").get<double>();
            if (row.contains("odc")) {
                const std::string c = row.at("odc").get<std::string>();
                s.odc = c == "best" ? OdcClass::best : c == "better" ? OdcClass::better : OdcClass::worst;
            }
            if (row.contains("odc_fitness")) s.odc_fitness = row.at("odc_fitness").get<double>();
            r.history.push_back(s);
        }
        r.wall_time_s = doc.at("wall_time_s").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed run record: ") + e.what());
    }
}

void write_results(const RunRecord& record, const std::string& prefix) {
    {
        std::ofstream json(prefix + ".json");
        if (!json) throw IoError("cannot write '" + prefix + ".json'");
        json << record_to_json(record).dump(2) << '\n';
        if (!json) throw IoError("failed writing '" + prefix + ".json'");
    }
    std::ofstream csv(prefix + ".csv");
    if (!csv) throw IoError("cannot write '" + prefix + ".csv'");
    csv << "iteration,best_fitness,mean_fitness,std_fitness\n";
    for (const IterationStats& s : record.history)
        csv << s.iteration << ',' << format_double(s.best_fitness) << ',' << format_double(s.mean_fitness) << ','
            << format_double(s.std_fitness) << '\n';
    if (!csv) throw IoError("failed writing '" + prefix + ".csv'");
}

RunRecord read_record(const std::filesystem::path& json_path) {
    std::ifstream in(json_path);
    if (!in) throw IoError("cannot open '" + json_path.string() + "'");
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return record_from_json(doc);
}

OdcRates odc_rates(const std::vector<RunRecord>& runs) {
    std::size_t longest = 0;
    for (const RunRecord& r : runs) longest = std::max(longest, r.history.size());
    OdcRates rates;
    rates.best.assign(longest, 0.0);
    rates.better.assign(longest, 0.0);
    rates.worst.assign(longest, 0.0);
    std::vector<std::size_t> reached(longest, 0);
    OdcCounts overall;
    for (const RunRecord& r : runs) {
        for (std::size_t i = 0; i < r.history.size(); ++i) {
            const auto& odc = r.history[i].odc;
            if (!odc) continue;
            ++reached[i];
            switch (*odc) {
                case OdcClass::best: rates.best[i] += 1; ++overall.best; break;
                case OdcClass::better: rates.better[i] += 1; ++overall.better; break;
                case OdcClass::worst: rates.worst[i] += 1; ++overall.worst; break;
            }
        }
    }
    for (std::size_t i = 0; i < longest; ++i) {
        if (reached[i] == 0) continue;
        const double n = static_cast<double>(reached[i]);
        rates.best[i] /= n;
        rates.better[i] /= n;
        rates.worst[i] /= n;
    }
    if (overall.total() > 0) {
        const double n = static_cast<double>(overall.total());
        rates.mean_best = static_cast<double>(overall.best) / n;
        rates.mean_better = static_cast<double>(overall.better) / n;
        rates.mean_worst = static_cast<double>(overall.worst) / n;
    }
    return rates;
}

void write_odc_stats(const std::vector<RunRecord>& runs, const std::string& prefix) {
    const OdcRates rates = odc_rates(runs);
    {
        std::ofstream csv(prefix + ".csv");
        if (!csv) throw IoError("cannot write '" + prefix + ".csv'");
        csv << "iteration,best_rate,better_rate,worst_rate\n";
        for (std::size_t i = 0; i < rates.best.size(); ++i)
            csv << i << ',' << format_double(rates.best[i]) << ',' << format_double(rates.better[i]) << ','
                << format_double(rates.worst[i]) << '\n';
        if (!csv) throw IoError("failed writing '" + prefix + ".csv'");
    }
    nlohmann::ordered_json doc;
    doc["repeats"] = runs.size();
    doc["best_rate"] = rates.mean_best;
    doc["better_rate"] = rates.mean_better;
    doc["worst_rate"] = rates.mean_worst;
    nlohmann::ordered_json per_run = nlohmann::ordered_json::array();
    for (const RunRecord& r : runs) {
        const OdcCounts c = r.odc_counts();
        per_run.push_back({{"seed", r.seed},
                           {"iterations", r.history.size()},
                           {"best", c.best},
                           {"better", c.better},
                           {"worst", c.worst},
                           {"final_fitness", r.best_fitness()}});
    }
    doc["runs"] = per_run;
    std::ofstream json(prefix + ".json");
    if (!json) throw IoError("cannot write '" + prefix + ".json'");
    json << doc.dump(2) << '\n';
    if (!json) throw IoError("failed writing '" + prefix + ".json'");
}

}  // namespace ddw
