// Command-line front end: synthetic data, template search, benchmarks and
// ODC statistics.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ddw/baselines.hpp"
#include "ddw/engine.hpp"
#include "ddw/error.hpp"
#include "ddw/io.hpp"
#include "ddw/problems.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitRuntime = 4;

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::stringstream in(text);
    std::string name;
    while (std::getline(in, name, ',')) names.push_back(name);
    return names;
}

void report(const ddw::RunRecord& record, const std::string& prefix) {
    std::cout << record.algorithm << " on " << record.problem << " (seed " << record.seed
              << "): best fitness " << ddw::format_double(record.best_fitness()) << " after "
              << record.history.size() << " iterations\n"
              << "wrote " << prefix << ".json and " << prefix << ".csv\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic Dimension Wrapping optimizer"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = OpenMP default); results do not depend on it");

    ddw::SynthParams synth;
    std::string channels = "back,l_thigh,r_thigh,l_shank,r_shank";
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic gait dataset");
    synth_cmd->add_option("--cycles", synth.n_cycles, "Number of gait cycles")->capture_default_str();
    synth_cmd->add_option("--base-len", synth.base_length, "Template length")->capture_default_str();
    synth_cmd->add_option("--jitter", synth.length_jitter, "Maximum per-cycle length change")->capture_default_str();
    synth_cmd->add_option("--noise", synth.noise_sd, "Gaussian noise standard deviation (degrees)")->capture_default_str();
    synth_cmd->add_option("--channels", channels, "Comma-separated channel names")->capture_default_str();
    synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
    synth_cmd->add_option("--out", synth_out, "Output CSV")->required();

    std::string data;
    std::string out;
    std::size_t pop = 50;
    std::size_t iters = 500;
    std::uint64_t seed = 0;
    auto* template_cmd = app.add_subcommand("template", "Search for a motion template with DDW");
    template_cmd->add_option("--data", data, "Gait CSV")->required();
    template_cmd->add_option("--pop", pop, "Population size")->capture_default_str();
    template_cmd->add_option("--iters", iters, "Iterations")->capture_default_str();
    template_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    template_cmd->add_option("--out", out, "Output prefix")->required();

    std::string fn;
    std::string algo = "ddw";
    std::optional<std::size_t> dim;
    auto* bench_cmd = app.add_subcommand("bench", "Run one optimizer on a benchmark function");
    bench_cmd->add_option("--fn", fn, "Benchmark F1..F23")->required();
    bench_cmd->add_option("--algo", algo, "Optimizer")->check(CLI::IsMember({"ddw", "pso", "gwo"}))->capture_default_str();
    bench_cmd->add_option("--dim", dim, "Dimension (default 30 for F1-F13; F14-F23 are fixed)");
    bench_cmd->add_option("--pop", pop, "Population size")->capture_default_str();
    bench_cmd->add_option("--iters", iters, "Iterations")->capture_default_str();
    bench_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    bench_cmd->add_option("--out", out, "Output prefix")->required();

    std::size_t repeats = 10;
    auto* odc_cmd = app.add_subcommand("odc-stats", "Best/Better/Worst rates of ODC over repeated runs");
    odc_cmd->add_option("--data", data, "Gait CSV")->required();
    odc_cmd->add_option("--pop", pop, "Population size")->capture_default_str();
    odc_cmd->add_option("--iters", iters, "Iterations")->capture_default_str();
    odc_cmd->add_option("--repeats", repeats, "Independent runs, seeds K..K+R-1")->capture_default_str();
    odc_cmd->add_option("--seed", seed, "First seed")->capture_default_str();
    odc_cmd->add_option("--out", out, "Output prefix")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        ddw::EngineConfig config;
        config.population_size = pop;
        config.max_iterations = iters;
        config.seed = seed;
        config.threads = threads;

        if (*synth_cmd) {
            synth.channels = split_names(channels);
            const ddw::SynthResult result = ddw::synth_dataset(synth);
            ddw::save_dataset(result.dataset, synth_out);
            const ddw::DimRange range = result.dataset.dim_range();
            std::cout << "wrote " << result.dataset.size() << " cycles, lengths " << range.min << ".." << range.max
                      << ", to " << synth_out << '\n';
        } else if (*template_cmd) {
            const ddw::ReferenceDataset dataset = ddw::load_dataset(data);
            const ddw::RunRecord record = ddw::run(dataset, config);
            ddw::write_results(record, out);
            report(record, out);
        } else if (*bench_cmd) {
            const ddw::BenchmarkProblem problem = ddw::make_benchmark(ddw::parse_benchmark_id(fn), dim);
            const ddw::Objective objective = problem.objective();
            ddw::RunRecord record;
            if (algo == "ddw") {
                record = ddw::run(objective, config);
            } else {
                ddw::BaselineConfig baseline;
                baseline.algorithm = algo == "pso" ? ddw::BaselineAlgorithm::pso : ddw::BaselineAlgorithm::gwo;
                baseline.population_size = pop;
                baseline.max_iterations = iters;
                baseline.threads = threads;
                record = ddw::run_baseline(baseline, objective, seed);
            }
            ddw::write_results(record, out);
            report(record, out);
            std::cout << "known optimum " << ddw::format_double(problem.known_optimum) << '\n';
        } else if (*odc_cmd) {
            if (repeats < 1) throw ddw::ConfigError("--repeats must be at least 1");
            const ddw::ReferenceDataset dataset = ddw::load_dataset(data);
            std::vector<ddw::RunRecord> runs;
            for (std::size_t r = 0; r < repeats; ++r) {
                config.seed = seed + r;
                runs.push_back(ddw::run(dataset, config));
            }
            ddw::write_odc_stats(runs, out);
            const ddw::OdcRates rates = ddw::odc_rates(runs);
            std::cout << "best " << rates.mean_best << ", better " << rates.mean_better << ", worst "
                      << rates.mean_worst << " over " << repeats << " runs\n"
                      << "wrote " << out << ".json and " << out << ".csv\n";
        }
    } catch (const ddw::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ddw::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ddw::FormatError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const ddw::ValidationError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
