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
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "khist/clustering.hpp"
#include "khist/dataset.hpp"
#include "khist/metrics.hpp"

namespace khist {

/// Inclusive k grid.
struct KRange {
    std::size_t start = 2;
    std::size_t end = 2;
    std::size_t step = 1;

    std::vector<std::size_t> values() const;
};

/// One benchmark sweep: a dataset, a set of algorithms, and a k grid.
/// Every (algorithm, k) cell runs with the shared first-k-distinct seeds so
/// comparisons stay fair.
struct SweepSpec {
    std::string name;
    std::filesystem::path dataset_path;
    LoadOptions load;
    std::vector<AlgorithmTag> algorithms;
    KRange k_range;
    std::vector<Fraction> avft_thresholds;  // appended as avft(t) cells
    RunConfig run;
};

/// Pairwise win/loss table between the first two algorithms of a sweep,
/// by exact clustering error at each k. An exact tie counts as rank 1 for
/// both sides.
struct RankingTable {
    struct Entry {
        std::size_t k = 0;
        Fraction error_a;
        Fraction error_b;
        int winner = 0;  // 0: a, 1: b, 2: tie
    };

    std::string algorithm_a;
    std::string algorithm_b;
    std::vector<Entry> entries;

    std::size_t rank1(const std::string& algorithm) const;
    std::size_t rank2(const std::string& algorithm) const;

    /// "k,<a>_error,<b>_error,rank1" rows.
    std::string csv() const;

    /// The two-row relative-performance table plus win counts.
    std::string human() const;
};

struct SweepResult {
    std::vector<RunReport> reports;           // algorithm-major, k ascending
    std::optional<RankingTable> ranking;      // present when >= 2 algorithms ran
};

/// Runs every cell of the sweep (cells run concurrently over the shared
/// immutable dataset; aggregation order is fixed, so results are
/// deterministic). Verifies that all algorithms received identical seed
/// indices at each k. A failing cell aborts the sweep with a DataError
/// naming the cell and how many cells had completed.
SweepResult run_sweep(const SweepSpec& spec);

/// Line charts (SVG) plus the underlying CSV for each measured quantity:
/// error, iterations, swaps and pure clusters against k. Eight files.
void emit_plots(const std::vector<RunReport>& reports, const std::filesystem::path& output_dir);

/// reports.csv, ranking.csv and the chart files under output_dir.
void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& output_dir);

/// Reads a sweep manifest (JSON). Relative dataset paths resolve against
/// the manifest's own directory.
SweepSpec load_preset(const std::filesystem::path& manifest_path);

/// Helpers shared by the CLI and the preset loader.
LabelColumn parse_label_column(std::string_view text);
DenominatorMode parse_denominator_mode(std::string_view text);
std::string_view denominator_mode_name(DenominatorMode mode);

}  // namespace khist
