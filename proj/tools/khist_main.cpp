/*
 * Copyright 2026 The khist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// khist: categorical clustering from the command line.
//
//   khist cluster   run one algorithm on one dataset, print the report
//   khist compare   run several algorithms at one k with shared seeds
//   khist bench     run a sweep (preset or explicit), write tables + charts
//   khist describe  print per-cluster value/frequency tables
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 runtime error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "khist/bench.hpp"
#include "khist/clustering.hpp"
#include "khist/dataset.hpp"
#include "khist/histogram.hpp"
#include "khist/metrics.hpp"

namespace {

using namespace khist;

struct LoadFlags {
    std::string label_col = "none";
    std::string missing_token = "?";
    std::string header = "absent";
    std::string delimiter = ",";

    LoadOptions to_options() const {
        LoadOptions opt;
        opt.label_column = parse_label_column(label_col);
        opt.missing_token = missing_token;
        if (header != "present" && header != "absent") throw UsageError("--header expects present or absent");
        opt.header = header == "present";
        if (delimiter.size() != 1) throw UsageError("--delimiter expects a single character");
        opt.delimiter = delimiter[0];
        return opt;
    }
};

void add_load_flags(CLI::App* cmd, LoadFlags& flags) {
    cmd->add_option("--label-col", flags.label_col, "Label column: first|last|none|INDEX")
        ->capture_default_str();
    cmd->add_option("--missing-token", flags.missing_token, "Token for missing entries (interned as a value)")
        ->capture_default_str();
    cmd->add_option("--header", flags.header, "Header row: present|absent")->capture_default_str();
    cmd->add_option("--delimiter", flags.delimiter, "Field delimiter")->capture_default_str();
}

struct RunFlags {
    std::size_t max_iter = 100;
    std::string denominator = "cluster";
    bool trace = false;

    RunConfig to_config() const {
        RunConfig cfg;
        cfg.max_iterations = max_iter;
        cfg.denominator = parse_denominator_mode(denominator);
        return cfg;
    }
};

void add_run_flags(CLI::App* cmd, RunFlags& flags) {
    cmd->add_option("--max-iter", flags.max_iter, "Maximum reallocation sweeps")->capture_default_str();
    cmd->add_option("--denominator", flags.denominator, "Score denominator: cluster|dataset")
        ->capture_default_str();
}

AlgorithmTag algorithm_from_flags(const std::string& algo, const std::string& threshold) {
    AlgorithmTag tag = AlgorithmTag::parse(algo);
    if (tag.kind == AlgorithmKind::avft) tag.threshold = Fraction::parse(threshold);
    return tag;
}

std::vector<AlgorithmTag> algorithms_from_list(const std::string& list, const std::string& threshold) {
    std::vector<AlgorithmTag> tags;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) tags.push_back(algorithm_from_flags(item, threshold));
    }
    if (tags.empty()) throw UsageError("--algos needs at least one algorithm");
    return tags;
}

std::size_t parse_size(const std::string& text) {
    if (text.empty()) throw UsageError("bad k value ''");
    std::size_t value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw UsageError("bad k value '" + text + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

KRange parse_k_range(const std::string& text, std::size_t step) {
    KRange range;
    range.step = step;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        range.start = parse_size(text.substr(0, dots));
        range.end = parse_size(text.substr(dots + 2));
    } else {
        range.start = range.end = parse_size(text);
    }
    return range;
}

void write_assignments(const std::filesystem::path& path, const ClusterModel& model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << "record,cluster\n";
    for (std::size_t i = 0; i < model.assignments.size(); ++i) {
        out << i << ',' << model.assignments[i] << '\n';
    }
}

int cmd_cluster(const std::string& data, const LoadFlags& load, const RunFlags& run, const std::string& algo,
                const std::string& threshold, std::size_t k, const std::string& out_dir,
                const std::string& format) {
    CategoricalDataset dataset = load_csv_file(data, load.to_options());
    RunConfig cfg = run.to_config();

    std::ofstream trace_file;
    if (run.trace) {
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            trace_file.open(std::filesystem::path(out_dir) / "trace.txt", std::ios::binary);
            if (!trace_file) throw DataError("cannot write trace file under " + out_dir);
            cfg.trace = &trace_file;
        } else {
            cfg.trace = &std::cerr;
        }
    }

    AlgorithmTag tag = algorithm_from_flags(algo, threshold);
    RunResult result = run_clustering(dataset, k, tag, cfg);
    RunReport report = make_report(std::filesystem::path(data).stem().string(), result, dataset);

    if (format == "csv") {
        std::cout << RunReport::csv_header() << '\n' << report.csv_row() << '\n';
    } else {
        std::cout << report.human(dataset);
    }

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_assignments(std::filesystem::path(out_dir) / "assignments.csv", result.model);
        std::ofstream report_csv(std::filesystem::path(out_dir) / "report.csv", std::ios::binary);
        report_csv << RunReport::csv_header() << '\n' << report.csv_row() << '\n';
    }
    return 0;
}

int cmd_compare(const std::string& data, const LoadFlags& load, const RunFlags& run, const std::string& algos,
                const std::string& threshold, std::size_t k, const std::string& format) {
    SweepSpec spec;
    spec.name = std::filesystem::path(data).stem().string();
    spec.dataset_path = data;
    spec.load = load.to_options();
    spec.run = run.to_config();
    spec.algorithms = algorithms_from_list(algos, threshold);
    spec.k_range = {k, k, 1};

    SweepResult result = run_sweep(spec);
    if (format == "csv") {
        std::cout << RunReport::csv_header() << '\n';
        for (const RunReport& r : result.reports) std::cout << r.csv_row() << '\n';
    } else {
        CategoricalDataset dataset = load_csv_file(spec.dataset_path, spec.load);
        for (const RunReport& r : result.reports) std::cout << r.human(dataset) << '\n';
    }
    if (result.ranking) std::cout << result.ranking->human();
    return 0;
}

int cmd_bench(const std::string& preset, const std::string& data_dir, const std::string& data,
              const LoadFlags& load, const RunFlags& run, const std::string& algos,
              const std::string& threshold, const std::string& k_text, std::size_t k_step,
              const std::string& thresholds_list, std::string out_dir) {
    SweepSpec spec;
    if (!preset.empty()) {
        std::filesystem::path manifest = preset;
        if (!std::filesystem::exists(manifest)) {
            manifest = std::filesystem::path(data_dir) / "presets" / (preset + ".json");
        }
        spec = load_preset(manifest);
    } else {
        if (data.empty() || k_text.empty()) {
            throw UsageError("bench needs either --preset or --data with --k");
        }
        spec.name = std::filesystem::path(data).stem().string();
        spec.dataset_path = data;
        spec.load = load.to_options();
        spec.run = run.to_config();
        spec.algorithms = algorithms_from_list(algos, threshold);
        spec.k_range = parse_k_range(k_text, k_step);
        if (!thresholds_list.empty()) {
            std::stringstream ss(thresholds_list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) spec.avft_thresholds.push_back(Fraction::parse(item));
            }
        }
    }

    if (out_dir.empty()) out_dir = "bench-out/" + spec.name;

    SweepResult result = run_sweep(spec);
    write_sweep_outputs(result, out_dir);

    std::cout << "sweep " << spec.name << ": " << result.reports.size() << " runs, outputs in " << out_dir
              << "\n";
    if (result.ranking) std::cout << result.ranking->human();
    return 0;
}

int cmd_describe(const std::string& data, const LoadFlags& load, const RunFlags& run, const std::string& algo,
                 const std::string& threshold, std::size_t k) {
    CategoricalDataset dataset = load_csv_file(data, load.to_options());
    AlgorithmTag tag = algorithm_from_flags(algo, threshold);
    RunResult result = run_clustering(dataset, k, tag, run.to_config());

    std::cout << "algorithm " << tag.name() << ", k=" << k << ", n=" << dataset.record_count() << "\n";
    for (std::size_t c = 0; c < result.model.k; ++c) {
        const ClusterSummary& summary = result.model.summaries[c];
        std::cout << "cluster " << c << " (size " << summary.member_count() << ")\n";
        describe_summary(std::cout, summary);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"categorical data clustering with histogram cluster representatives"};
    app.require_subcommand(1);

    // cluster
    auto* cluster = app.add_subcommand("cluster", "Run one clustering and print its report");
    std::string cl_data, cl_algo = "khist", cl_threshold = "0", cl_out, cl_format = "human";
    std::size_t cl_k = 2;
    LoadFlags cl_load;
    RunFlags cl_run;
    cluster->add_option("--data", cl_data, "Dataset file")->required();
    cluster->add_option("--algo", cl_algo, "Algorithm: khist|kmodes|avft")->capture_default_str();
    cluster->add_option("--threshold", cl_threshold, "AVFT threshold in [0,1] (avft only)")
        ->capture_default_str();
    cluster->add_option("--k", cl_k, "Number of clusters")->required();
    add_load_flags(cluster, cl_load);
    add_run_flags(cluster, cl_run);
    cluster->add_flag("--trace", cl_run.trace, "Emit one line per reallocation");
    cluster->add_option("--out", cl_out, "Directory for assignments.csv, report.csv and trace.txt");
    cluster->add_option("--format", cl_format, "Report format: human|csv")->capture_default_str();

    // compare
    auto* compare = app.add_subcommand("compare", "Run several algorithms at one k with shared seeds");
    std::string cp_data, cp_algos = "khist,kmodes", cp_threshold = "0", cp_format = "human";
    std::size_t cp_k = 2;
    LoadFlags cp_load;
    RunFlags cp_run;
    compare->add_option("--data", cp_data, "Dataset file")->required();
    compare->add_option("--algos", cp_algos, "Comma-separated algorithms")->capture_default_str();
    compare->add_option("--threshold", cp_threshold, "AVFT threshold for avft entries")
        ->capture_default_str();
    compare->add_option("--k", cp_k, "Number of clusters")->required();
    add_load_flags(compare, cp_load);
    add_run_flags(compare, cp_run);
    compare->add_option("--format", cp_format, "Report format: human|csv")->capture_default_str();

    // bench
    auto* bench = app.add_subcommand("bench", "Run a sweep and write tables and charts");
    std::string bn_preset, bn_data_dir = "data", bn_data, bn_algos = "khist,kmodes", bn_threshold = "0";
    std::string bn_k, bn_thresholds, bn_out;
    std::size_t bn_k_step = 1;
    LoadFlags bn_load;
    RunFlags bn_run;
    bench->add_option("--preset", bn_preset, "Preset name (under <data-dir>/presets) or manifest path");
    bench->add_option("--data-dir", bn_data_dir, "Directory holding presets and datasets")
        ->capture_default_str();
    bench->add_option("--data", bn_data, "Dataset file (explicit sweep)");
    bench->add_option("--algos", bn_algos, "Comma-separated algorithms")->capture_default_str();
    bench->add_option("--threshold", bn_threshold, "AVFT threshold for avft entries")->capture_default_str();
    bench->add_option("--k", bn_k, "k value or inclusive range A..B");
    bench->add_option("--k-step", bn_k_step, "Step through the k range")->capture_default_str();
    bench->add_option("--avft-thresholds", bn_thresholds,
                      "Comma-separated thresholds appended as avft cells");
    add_load_flags(bench, bn_load);
    add_run_flags(bench, bn_run);
    bench->add_option("--out", bn_out, "Output directory (default bench-out/<name>)");

    // describe
    auto* describe = app.add_subcommand("describe", "Cluster and print per-cluster histograms");
    std::string de_data, de_algo = "khist", de_threshold = "0";
    std::size_t de_k = 2;
    LoadFlags de_load;
    RunFlags de_run;
    describe->add_option("--data", de_data, "Dataset file")->required();
    describe->add_option("--algo", de_algo, "Algorithm: khist|kmodes|avft")->capture_default_str();
    describe->add_option("--threshold", de_threshold, "AVFT threshold (avft only)")->capture_default_str();
    describe->add_option("--k", de_k, "Number of clusters")->required();
    add_load_flags(describe, de_load);
    add_run_flags(describe, de_run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cluster->parsed()) {
            return cmd_cluster(cl_data, cl_load, cl_run, cl_algo, cl_threshold, cl_k, cl_out, cl_format);
        }
        if (compare->parsed()) {
            return cmd_compare(cp_data, cp_load, cp_run, cp_algos, cp_threshold, cp_k, cp_format);
        }
        if (bench->parsed()) {
            return cmd_bench(bn_preset, bn_data_dir, bn_data, bn_load, bn_run, bn_algos, bn_threshold, bn_k,
                             bn_k_step, bn_thresholds, bn_out);
        }
        if (describe->parsed()) {
            return cmd_describe(de_data, de_load, de_run, de_algo, de_threshold, de_k);
        }
        throw UsageError("no subcommand selected");
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 1;
    } catch (const DataError& ex) {
        std::cerr << "data error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
}
