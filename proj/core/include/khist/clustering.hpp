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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "khist/dataset.hpp"
#include "khist/dissimilarity.hpp"
#include "khist/fraction.hpp"
#include "khist/histogram.hpp"

namespace khist {

enum class AlgorithmKind { khistograms, kmodes, avft };

/// Denominator used when a record is scored against a cluster summary:
/// the summary's own member count (default, makes scores comparable across
/// clusters of different sizes) or the whole dataset size.
enum class DenominatorMode { cluster, dataset };

struct AlgorithmTag {
    AlgorithmKind kind = AlgorithmKind::khistograms;
    Fraction threshold;  // meaningful for avft only

    /// "khist", "kmodes" or "avft(t)", the CLI spelling.
    std::string name() const;

    static AlgorithmTag khistograms() { return {AlgorithmKind::khistograms, Fraction(0)}; }
    static AlgorithmTag kmodes() { return {AlgorithmKind::kmodes, Fraction(0)}; }
    static AlgorithmTag avft(Fraction threshold) { return {AlgorithmKind::avft, threshold}; }

    /// Parses a CLI spelling ("khist", "kmodes", "avft", "avft(0.5)").
    static AlgorithmTag parse(std::string_view text);
};

struct RunConfig {
    std::size_t max_iterations = 100;
    DenominatorMode denominator = DenominatorMode::cluster;

    /// When set, one line is written per reallocation:
    ///   iter=<sweep> obj=<record> from=<cluster> to=<cluster>
    ///   from_score=<exact> to_score=<exact>
    /// Scores are match fractions for khistograms/avft and plain
    /// simple-matching distances for kmodes.
    std::ostream* trace = nullptr;

    /// Rebuild every summary from the assignment vector after each sweep and
    /// compare with the maintained ones (IntegrityError on mismatch). Meant
    /// for small instances; costs a full pass per sweep.
    bool validate_each_sweep = false;
};

/// Final partition: the assignment vector (one cluster per object) and the
/// maintained summary of each cluster. Keeps a reference to the dataset's
/// schema; the dataset must outlive the model.
struct ClusterModel {
    AlgorithmTag algorithm;
    DenominatorMode denominator = DenominatorMode::cluster;
    std::size_t k = 0;
    std::vector<std::uint32_t> assignments;      // n entries in 0..k-1
    std::vector<ClusterSummary> summaries;       // k entries
    std::vector<std::vector<ValueCode>> modes;   // k mode records (kmodes only)
    std::vector<std::size_t> seed_indices;       // records that seeded the clusters

    std::size_t cluster_size(std::size_t cluster) const { return summaries.at(cluster).member_count(); }
};

struct ConvergenceStats {
    std::size_t iterations = 0;                   // full reallocation sweeps
    std::vector<std::size_t> swaps_per_iteration; // objects moved per sweep
    std::vector<double> cost_trace;               // match-form cost after each sweep
    bool converged = false;                       // last sweep moved nothing

    std::size_t total_swaps() const;
};

struct RunResult {
    ClusterModel model;
    ConvergenceStats stats;
};

/// Indices of the first k pairwise-distinct records in file order.
/// Raises DataError naming the distinct count when the data has fewer.
std::vector<std::size_t> seed_first_k_distinct(const CategoricalDataset& dataset, std::size_t k);

/// The iterative histogram clusterer. Seeds k singleton clusters from the
/// first k distinct records, allocates the remaining objects in file order
/// to the cluster with the highest match score (updating that summary after
/// each allocation), then sweeps all objects until a full sweep moves none.
/// An object's score against its own cluster counts the object itself; a
/// move that would empty a cluster is vetoed. Fully deterministic.
RunResult run_khistograms(const CategoricalDataset& dataset, std::size_t k, const RunConfig& config = {});

/// The mode-representative baseline on the identical loop skeleton: each
/// cluster is represented by its mode record, objects move to the mode with
/// the smallest simple-matching distance, and the mode is recomputed from
/// the maintained histograms after every membership change. Same seeding
/// and tie rules as run_khistograms.
RunResult run_kmodes(const CategoricalDataset& dataset, std::size_t k, const RunConfig& config = {});

/// The threshold family between the two: histogram scoring over per-
/// attribute histograms truncated at the given relative frequency.
/// Threshold 0 is trace-identical to run_khistograms; threshold 1 scores
/// through each attribute's top value only.
RunResult run_avft(const CategoricalDataset& dataset, std::size_t k, const Fraction& threshold,
                   const RunConfig& config = {});

/// Dispatch on an AlgorithmTag.
RunResult run_clustering(const CategoricalDataset& dataset, std::size_t k, const AlgorithmTag& algorithm,
                         const RunConfig& config = {});

/// Exact match-form cost of a model: the sum over objects of the match
/// score against their own cluster's summary. Computed per cluster as the
/// sum of squared frequencies (identical to the per-object sum), so it is
/// O(total distinct values) rather than O(n * m).
Fraction cost(const ClusterModel& model, const CategoricalDataset& dataset);

/// Same value as a double, accumulated in cluster order (deterministic).
double cost_value(const ClusterModel& model, const CategoricalDataset& dataset);

}  // namespace khist
