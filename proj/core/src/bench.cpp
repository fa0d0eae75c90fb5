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
#include "khist/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "svg_chart.hpp"

namespace khist {

std::vector<std::size_t> KRange::values() const {
    if (step == 0) throw UsageError("k step must be positive");
    if (start == 0) throw UsageError("k must be at least 1");
    if (end < start) throw UsageError("empty k range");
    std::vector<std::size_t> out;
    for (std::size_t k = start; k <= end; k += step) out.push_back(k);
    return out;
}

std::size_t RankingTable::rank1(const std::string& algorithm) const {
    std::size_t total = 0;
    for (const Entry& e : entries) {
        if (algorithm == algorithm_a && (e.winner == 0 || e.winner == 2)) ++total;
        if (algorithm == algorithm_b && (e.winner == 1 || e.winner == 2)) ++total;
    }
    return total;
}

std::size_t RankingTable::rank2(const std::string& algorithm) const {
    std::size_t total = 0;
    for (const Entry& e : entries) {
        if (algorithm == algorithm_a && e.winner == 1) ++total;
        if (algorithm == algorithm_b && e.winner == 0) ++total;
    }
    return total;
}

std::string RankingTable::csv() const {
    std::ostringstream out;
    out << "k," << algorithm_a << "_error," << algorithm_b << "_error,rank1\n";
    char buf[40];
    for (const Entry& e : entries) {
        std::snprintf(buf, sizeof(buf), "%.6f", e.error_a.to_double());
        out << e.k << ',' << buf;
        std::snprintf(buf, sizeof(buf), "%.6f", e.error_b.to_double());
        out << ',' << buf << ',';
        out << (e.winner == 0 ? algorithm_a : e.winner == 1 ? algorithm_b : "tie") << "\n";
    }
    return out.str();
}

std::string RankingTable::human() const {
    std::ostringstream out;
    out << "relative performance over " << entries.size() << " k values (winner by error)\n";
    out << "  ranking        1      2\n";
    char line[96];
    std::snprintf(line, sizeof(line), "  %-12s %4zu   %4zu\n", algorithm_a.c_str(), rank1(algorithm_a),
                  rank2(algorithm_a));
    out << line;
    std::snprintf(line, sizeof(line), "  %-12s %4zu   %4zu\n", algorithm_b.c_str(), rank1(algorithm_b),
                  rank2(algorithm_b));
    out << line;
    return out.str();
}

namespace {

struct Cell {
    AlgorithmTag algorithm;
    std::size_t k;
};

RankingTable build_ranking(const std::vector<RunReport>& reports, const std::string& a, const std::string& b) {
    std::map<std::size_t, const RunReport*> by_k_a;
    std::map<std::size_t, const RunReport*> by_k_b;
    for (const RunReport& r : reports) {
        if (r.algorithm == a) by_k_a[r.k] = &r;
        if (r.algorithm == b) by_k_b[r.k] = &r;
    }
    RankingTable table;
    table.algorithm_a = a;
    table.algorithm_b = b;
    for (const auto& [k, ra] : by_k_a) {
        auto it = by_k_b.find(k);
        if (it == by_k_b.end()) continue;
        RankingTable::Entry entry;
        entry.k = k;
        entry.error_a = ra->error;
        entry.error_b = it->second->error;
        entry.winner = entry.error_a < entry.error_b ? 0 : entry.error_b < entry.error_a ? 1 : 2;
        table.entries.push_back(entry);
    }
    return table;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    const CategoricalDataset dataset = load_csv_file(spec.dataset_path, spec.load);

    std::vector<AlgorithmTag> algorithms = spec.algorithms;
    for (const Fraction& t : spec.avft_thresholds) algorithms.push_back(AlgorithmTag::avft(t));
    if (algorithms.empty()) throw UsageError("sweep needs at least one algorithm");

    const std::vector<std::size_t> ks = spec.k_range.values();
    std::vector<Cell> cells;
    for (const AlgorithmTag& tag : algorithms) {
        for (std::size_t k : ks) cells.push_back({tag, k});
    }

    std::vector<std::optional<RunReport>> slots(cells.size());
    std::vector<std::string> failures(cells.size());
    std::atomic<std::size_t> next{0};

    const std::size_t worker_count =
        std::max<std::size_t>(1, std::min<std::size_t>(cells.size(), std::thread::hardware_concurrency()));
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
        workers.emplace_back([&] {
            for (std::size_t idx = next.fetch_add(1); idx < cells.size(); idx = next.fetch_add(1)) {
                const Cell& cell = cells[idx];
                try {
                    RunResult result = run_clustering(dataset, cell.k, cell.algorithm, spec.run);
                    slots[idx] = make_report(spec.name, result, dataset);
                } catch (const std::exception& ex) {
                    failures[idx] = ex.what();
                }
            }
        });
    }
    for (std::thread& t : workers) t.join();

    std::size_t completed = 0;
    for (const auto& slot : slots) completed += slot.has_value();
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        if (!failures[idx].empty()) {
            throw DataError("sweep aborted: cell (" + cells[idx].algorithm.name() + ", k=" +
                            std::to_string(cells[idx].k) + ") failed: " + failures[idx] + " [" +
                            std::to_string(completed) + " of " + std::to_string(cells.size()) +
                            " cells completed]");
        }
    }

    SweepResult result;
    result.reports.reserve(cells.size());
    for (auto& slot : slots) result.reports.push_back(std::move(*slot));

    // Fairness: every algorithm must have clustered from the same seeds.
    for (std::size_t i = 0; i < ks.size(); ++i) {
        for (std::size_t a = 1; a < algorithms.size(); ++a) {
            if (result.reports[a * ks.size() + i].seed_indices != result.reports[i].seed_indices) {
                throw IntegrityError("seed indices diverged between algorithms at k=" + std::to_string(ks[i]));
            }
        }
    }

    if (algorithms.size() >= 2) {
        result.ranking = build_ranking(result.reports, algorithms[0].name(), algorithms[1].name());
    }
    return result;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << content;
    if (!out) throw DataError("write failed for " + path.string());
}

struct Quantity {
    const char* stem;
    const char* title;
    const char* y_label;
    double (*value)(const RunReport&);
};

const Quantity kQuantities[] = {
    {"error_vs_k", "Clustering error vs. number of clusters", "clustering error",
     [](const RunReport& r) { return r.error.to_double(); }},
    {"iterations_vs_k", "Iterations vs. number of clusters", "iterations",
     [](const RunReport& r) { return static_cast<double>(r.iterations); }},
    {"swaps_vs_k", "Objects changed clusters vs. number of clusters", "objects changed clusters",
     [](const RunReport& r) { return static_cast<double>(r.total_swaps); }},
    {"pure_clusters_vs_k", "Pure clusters vs. number of clusters", "pure clusters",
     [](const RunReport& r) { return static_cast<double>(r.pure_cluster_count); }},
};

}  // namespace

void emit_plots(const std::vector<RunReport>& reports, const std::filesystem::path& output_dir) {
    if (reports.empty()) throw UsageError("no reports to plot");
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw DataError("cannot create output directory " + output_dir.string() + ": " + ec.message());

    // Algorithm order follows first appearance in the reports.
    std::vector<std::string> order;
    for (const RunReport& r : reports) {
        if (std::find(order.begin(), order.end(), r.algorithm) == order.end()) order.push_back(r.algorithm);
    }

    for (const Quantity& q : kQuantities) {
        std::ostringstream csv;
        csv << "k,algorithm,value\n";
        std::vector<detail::ChartSeries> series;
        for (const std::string& algo : order) {
            detail::ChartSeries s;
            s.name = algo;
            for (const RunReport& r : reports) {
                if (r.algorithm != algo) continue;
                const double v = q.value(r);
                s.points.emplace_back(static_cast<double>(r.k), v);
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.6f", v);
                csv << r.k << ',' << algo << ',' << buf << "\n";
            }
            std::sort(s.points.begin(), s.points.end());
            series.push_back(std::move(s));
        }
        write_file(output_dir / (std::string(q.stem) + ".csv"), csv.str());
        write_file(output_dir / (std::string(q.stem) + ".svg"),
                   detail::render_line_chart(q.title, "number of clusters k", q.y_label, series));
    }
}

void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw DataError("cannot create output directory " + output_dir.string() + ": " + ec.message());

    std::ostringstream reports_csv;
    reports_csv << RunReport::csv_header() << "\n";
    for (const RunReport& r : result.reports) reports_csv << r.csv_row() << "\n";
    write_file(output_dir / "reports.csv", reports_csv.str());

    if (result.ranking) write_file(output_dir / "ranking.csv", result.ranking->csv());
    emit_plots(result.reports, output_dir);
}

LabelColumn parse_label_column(std::string_view text) {
    if (text == "none") return LabelColumn::none();
    if (text == "first") return LabelColumn::first();
    if (text == "last") return LabelColumn::last();
    std::size_t index = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw UsageError("bad label column '" + std::string(text) + "'");
        index = index * 10 + static_cast<std::size_t>(c - '0');
    }
    if (text.empty()) throw UsageError("bad label column ''");
    return LabelColumn::at(index);
}

DenominatorMode parse_denominator_mode(std::string_view text) {
    if (text == "cluster") return DenominatorMode::cluster;
    if (text == "dataset") return DenominatorMode::dataset;
    throw UsageError("bad denominator mode '" + std::string(text) + "' (expected cluster or dataset)");
}

std::string_view denominator_mode_name(DenominatorMode mode) {
    return mode == DenominatorMode::cluster ? "cluster" : "dataset";
}

SweepSpec load_preset(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw DataError("cannot open preset manifest: " + manifest_path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("bad preset manifest " + manifest_path.string() + ": " + ex.what());
    }

    try {
        SweepSpec spec;
        spec.name = doc.at("name").get<std::string>();
        std::filesystem::path dataset = doc.at("dataset").get<std::string>();
        spec.dataset_path = dataset.is_absolute() ? dataset : manifest_path.parent_path() / dataset;

        if (doc.contains("load")) {
            const auto& load = doc.at("load");
            if (load.contains("delimiter")) {
                std::string d = load.at("delimiter").get<std::string>();
                if (d.size() != 1) throw UsageError("delimiter must be one character");
                spec.load.delimiter = d[0];
            }
            if (load.contains("label_column")) {
                spec.load.label_column = parse_label_column(load.at("label_column").get<std::string>());
            }
            if (load.contains("missing_token")) {
                spec.load.missing_token = load.at("missing_token").get<std::string>();
            }
            if (load.contains("header")) spec.load.header = load.at("header").get<bool>();
        }

        for (const auto& name : doc.at("algorithms")) {
            spec.algorithms.push_back(AlgorithmTag::parse(name.get<std::string>()));
        }
        const auto& k = doc.at("k");
        spec.k_range.start = k.at("start").get<std::size_t>();
        spec.k_range.end = k.at("end").get<std::size_t>();
        spec.k_range.step = k.value("step", std::size_t{1});

        if (doc.contains("avft_thresholds")) {
            for (const auto& t : doc.at("avft_thresholds")) {
                spec.avft_thresholds.push_back(Fraction::parse(t.get<std::string>()));
            }
        }
        spec.run.max_iterations = doc.value("max_iterations", std::size_t{100});
        if (doc.contains("denominator")) {
            spec.run.denominator = parse_denominator_mode(doc.at("denominator").get<std::string>());
        }
        return spec;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("bad preset manifest " + manifest_path.string() + ": " + ex.what());
    }
}

}  // namespace khist
