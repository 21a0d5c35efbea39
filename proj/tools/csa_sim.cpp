// csa-sim: simulation and analysis toolkit for channel static antennas
// Copyright (C) 2026 The csa-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "csa/analysis.hpp"
#include "csa/experiment.hpp"
#include "csa/field.hpp"
#include "csa/kinematics.hpp"
#include "csa/report.hpp"
#include "csa/scenario.hpp"
#include "csa/stat_model.hpp"
#include "csa/threading.hpp"
#include "csa/trace.hpp"
#include "csa/trace_io.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct SimulateArgs {
    std::string config;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> noise_seed;
    std::optional<std::size_t> ensemble;
    std::vector<std::string> modes;
};

struct ModelArgs {
    std::string config;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> ensemble;
};

struct AnalyzeArgs {
    std::vector<std::string> traces;
    std::string out = "report.txt";
    double epsilon = 1e-6;
    std::string intervals_csv;
    std::string config;
    std::size_t autocorr_seeds = 100;
    double autocorr_max_lag = 2.0;
    double autocorr_step = 0.1;
};

struct CompareArgs {
    std::vector<std::string> traces;
    std::string out;
};

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw csa::io::IoError("cannot create output directory '" + dir.string() + "': " +
                               ec.message());
    }
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw csa::io::IoError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw csa::io::IoError("failed writing '" + path.string() + "'");
    }
}

/// Runs tasks over a bounded worker pool; results land in caller-provided
/// slots, so output order never depends on scheduling.
void run_parallel(std::size_t task_count, const std::function<void(std::size_t)>& task) {
    const std::size_t workers = csa::thread_cap(task_count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < task_count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < task_count; i = next.fetch_add(1)) {
                task(i);
            }
        });
    }
    for (std::thread& thread : pool) {
        thread.join();
    }
}

int run_simulate(const SimulateArgs& args) {
    csa::io::Scenario scenario = csa::io::load_scenario(args.config);
    if (args.seed) {
        scenario.field.seed = *args.seed;
    }
    if (args.noise_seed) {
        scenario.noise_seed = *args.noise_seed;
    }
    if (args.ensemble) {
        scenario.ensemble = *args.ensemble;
    }
    if (!args.modes.empty()) {
        scenario.modes.clear();
        for (const std::string& name : args.modes) {
            const auto mode = csa::mode_from_string(name);
            if (!mode || *mode == csa::Mode::model) {
                throw csa::io::ConfigError("--mode: expected regular, csa or stationary, got '" +
                                           name + "'");
            }
            scenario.modes.push_back(*mode);
        }
    }
    scenario.validate();

    const fs::path out_dir(args.out);
    ensure_directory(out_dir);

    const auto trajectory =
        csa::kinematics::linear_trajectory(scenario.total_distance, scenario.step);

    struct Task {
        std::size_t run = 0;
        csa::Mode mode = csa::Mode::regular;
        csa::ChannelTrace trace;
        fs::path path;
    };
    std::vector<Task> tasks;
    for (std::size_t run = 0; run < scenario.ensemble; ++run) {
        for (const csa::Mode mode : scenario.modes) {
            Task task;
            task.run = run;
            task.mode = mode;
            std::string name{csa::to_string(mode)};
            if (scenario.ensemble > 1) {
                name += "_seed" + std::to_string(scenario.field.seed + run);
            }
            task.path = out_dir / (name + ".csv");
            tasks.push_back(std::move(task));
        }
    }

    run_parallel(tasks.size(), [&](std::size_t index) {
        Task& task = tasks[index];
        csa::field::FieldParams params = scenario.field;
        params.seed = scenario.field.seed + task.run;
        const csa::field::FieldModel field = csa::field::synthesize_field(params);
        task.trace = csa::experiment::run_mode(field, trajectory, scenario.mount, task.mode,
                                               scenario.residual_sigma,
                                               scenario.noise_seed + task.run);
        task.trace.meta.scenario_id = scenario.id;
        task.trace.meta.speed = scenario.speed;
    });

    for (const Task& task : tasks) {
        csa::io::write_trace_csv(task.path, task.trace);
        std::cout << "wrote " << task.path.string() << " (" << task.trace.samples.size()
                  << " samples, " << task.trace.interval_count() << " intervals)\n";
    }
    return kExitOk;
}

int run_model(const ModelArgs& args) {
    csa::io::Scenario scenario = csa::io::load_scenario(args.config);
    if (args.seed) {
        scenario.model.seed = *args.seed;
    }
    if (args.ensemble) {
        scenario.ensemble = *args.ensemble;
    }
    scenario.validate();

    const fs::path out_dir(args.out);
    ensure_directory(out_dir);

    std::vector<csa::ChannelTrace> traces(scenario.ensemble);
    run_parallel(scenario.ensemble, [&](std::size_t run) {
        csa::model::PiecewiseStaticModel model = scenario.model;
        model.seed = scenario.model.seed + run;
        traces[run] =
            csa::model::generate_model_trace(model, scenario.total_distance, scenario.step);
        traces[run].meta.scenario_id = scenario.id;
        traces[run].meta.speed = scenario.speed;
    });

    for (std::size_t run = 0; run < traces.size(); ++run) {
        std::string name = "model";
        if (scenario.ensemble > 1) {
            name += "_seed" + std::to_string(scenario.model.seed + run);
        }
        const fs::path path = out_dir / (name + ".csv");
        csa::io::write_trace_csv(path, traces[run]);
        std::cout << "wrote " << path.string() << " (" << traces[run].samples.size()
                  << " samples, " << traces[run].interval_count() << " intervals)\n";
    }
    return kExitOk;
}

int run_analyze(const AnalyzeArgs& args) {
    std::optional<csa::io::Scenario> scenario;
    if (!args.config.empty()) {
        scenario = csa::io::load_scenario(args.config);
    }

    std::string report_text;
    std::string intervals_csv;
    std::vector<double> fade_depths;
    bool any_infinite_fade = false;

    for (std::size_t index = 0; index < args.traces.size(); ++index) {
        const csa::ChannelTrace trace = csa::io::read_trace_csv(args.traces[index]);
        csa::analysis::AnalysisReport report = csa::analysis::analyze_trace(trace, args.epsilon);

        if (scenario && index == 0) {
            // The autocorrelation describes the configured field, not any
            // single trace; attach it to the first section.
            std::vector<double> lags;
            for (double lag = 0.0; lag <= args.autocorr_max_lag + 1e-12;
                 lag += args.autocorr_step) {
                lags.push_back(lag);
            }
            report.autocorr =
                csa::analysis::spatial_autocorr(scenario->field, lags, args.autocorr_seeds);
        }

        const std::string prefix =
            args.traces.size() > 1 ? "trace" + std::to_string(index) + "." : "";
        report_text += csa::io::report_to_kv(
            report, trace, args.traces[index], prefix,
            scenario ? std::optional<double>(scenario->carrier_frequency_hz) : std::nullopt);
        if (args.traces.size() > 1) {
            report_text += "\n";
        }
        intervals_csv += csa::io::intervals_to_csv(report);

        std::cout << csa::io::summary_line(report, trace, args.traces[index]) << "\n";
        if (report.fade.infinite) {
            any_infinite_fade = true;
        } else {
            fade_depths.push_back(report.fade.db);
        }
    }

    if (args.traces.size() > 1 && !fade_depths.empty()) {
        std::sort(fade_depths.begin(), fade_depths.end());
        const std::size_t count = fade_depths.size();
        const double median = (count % 2 == 1)
                                  ? fade_depths[count / 2]
                                  : 0.5 * (fade_depths[count / 2 - 1] + fade_depths[count / 2]);
        const auto over_20 =
            static_cast<double>(std::count_if(fade_depths.begin(), fade_depths.end(),
                                              [](double db) { return db > 20.0; })) /
            static_cast<double>(count);
        report_text += "ensemble.traces = " + std::to_string(args.traces.size()) + "\n";
        report_text += "ensemble.fade_depth_median_db = " + csa::io::format_double(median) + "\n";
        report_text +=
            "ensemble.fade_depth_min_db = " + csa::io::format_double(fade_depths.front()) + "\n";
        report_text +=
            "ensemble.fade_depth_max_db = " + csa::io::format_double(fade_depths.back()) + "\n";
        report_text +=
            "ensemble.fade_depth_share_over_20db = " + csa::io::format_double(over_20) + "\n";
        if (any_infinite_fade) {
            report_text += "ensemble.infinite_fade_traces = 1\n";
        }
        std::cout << "ensemble: median fade depth " << std::fixed << std::setprecision(2)
                  << median << " dB, " << std::setprecision(0) << 100.0 * over_20
                  << "% of traces above 20 dB\n";
    }

    if (!args.out.empty()) {
        write_text_file(args.out, report_text);
        std::cout << "wrote " << args.out << "\n";
    }
    if (!args.intervals_csv.empty()) {
        write_text_file(args.intervals_csv, intervals_csv);
        std::cout << "wrote " << args.intervals_csv << "\n";
    }
    return kExitOk;
}

int run_compare(const CompareArgs& args) {
    std::vector<csa::ChannelTrace> traces;
    traces.reserve(args.traces.size());
    for (const std::string& path : args.traces) {
        traces.push_back(csa::io::read_trace_csv(path));
    }

    std::vector<csa::analysis::ModeSummary> summaries;
    try {
        summaries = csa::analysis::compare_modes(traces);
    } catch (const std::invalid_argument& error) {
        throw csa::io::ConfigError(error.what());
    }

    std::cout << std::left << std::setw(12) << "mode" << std::right << std::setw(9) << "samples"
              << std::setw(12) << "fade[dB]" << std::setw(12) << "totalvar" << std::setw(11)
              << "intervals" << std::setw(14) << "within-var" << std::setw(17)
              << "within-fade[dB]" << "\n";
    for (const csa::analysis::ModeSummary& summary : summaries) {
        std::cout << std::left << std::setw(12) << csa::to_string(summary.mode) << std::right
                  << std::setw(9) << summary.samples << std::setw(12) << std::fixed
                  << std::setprecision(2) << (summary.fade.infinite ? INFINITY : summary.fade.db)
                  << std::setw(12) << std::setprecision(4) << summary.total_variation
                  << std::setw(11) << summary.intervals << std::setw(14) << std::setprecision(6)
                  << summary.mean_within_interval_variance << std::setw(17)
                  << std::setprecision(2) << summary.within_interval_fade_depth_db << "\n";
    }

    if (!args.out.empty()) {
        write_text_file(args.out, csa::io::comparison_to_csv(summaries));
        std::cout << "wrote " << args.out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"csa-sim: simulate and analyze piecewise-static channels kept by a "
                 "counter-moving antenna"};
    app.require_subcommand(1);

    SimulateArgs simulate_args;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run measurement modes over a synthesized multipath field");
    simulate->add_option("--config", simulate_args.config, "Scenario config file")->required();
    simulate->add_option("--out", simulate_args.out, "Output directory (default .)");
    simulate->add_option("--seed", simulate_args.seed, "Override field seed");
    simulate->add_option("--noise-seed", simulate_args.noise_seed, "Override noise seed");
    simulate->add_option("--ensemble", simulate_args.ensemble,
                         "Number of seeds to run (files get a _seed<N> suffix)");
    simulate->add_option("--mode", simulate_args.modes,
                         "Mode to run (regular|csa|stationary); repeatable, overrides config");

    ModelArgs model_args;
    CLI::App* model =
        app.add_subcommand("model", "Draw traces from the piecewise static channel model");
    model->add_option("--config", model_args.config, "Scenario config file")->required();
    model->add_option("--out", model_args.out, "Output directory (default .)");
    model->add_option("--seed", model_args.seed, "Override model seed");
    model->add_option("--ensemble", model_args.ensemble, "Number of seeds to run");

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze trace CSV files");
    analyze->add_option("traces", analyze_args.traces, "Trace CSV files")
        ->required()
        ->expected(-1);
    analyze->add_option("--out", analyze_args.out, "Report file (default report.txt)");
    analyze->add_option("--epsilon", analyze_args.epsilon,
                        "Segmentation threshold (default 1e-6)");
    analyze->add_option("--intervals-csv", analyze_args.intervals_csv,
                        "Also write per-interval statistics as CSV");
    analyze->add_option("--config", analyze_args.config,
                        "Scenario config; adds field autocorrelation and unit conversion");
    analyze->add_option("--autocorr-seeds", analyze_args.autocorr_seeds,
                        "Seeds for the autocorrelation estimate (default 100)");
    analyze->add_option("--autocorr-max-lag", analyze_args.autocorr_max_lag,
                        "Largest lag in lambda (default 2)");
    analyze->add_option("--autocorr-step", analyze_args.autocorr_step,
                        "Lag grid step in lambda (default 0.1)");

    CompareArgs compare_args;
    CLI::App* compare =
        app.add_subcommand("compare", "Summarize traces that share one trajectory grid");
    compare->add_option("traces", compare_args.traces, "Trace CSV files")
        ->required()
        ->expected(-1);
    compare->add_option("--out", compare_args.out, "Write the comparison table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(simulate_args);
        }
        if (model->parsed()) {
            return run_model(model_args);
        }
        if (analyze->parsed()) {
            return run_analyze(analyze_args);
        }
        if (compare->parsed()) {
            return run_compare(compare_args);
        }
    } catch (const csa::io::ConfigError& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return kExitConfig;
    } catch (const csa::io::IoError& error) {
        std::cerr << "i/o error: " << error.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return kExitOk;
}
