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
#include <string>
#include <vector>

#include "khist/clustering.hpp"
#include "khist/dataset.hpp"
#include "khist/fraction.hpp"

namespace khist {

/// Accuracy r: the dominant-class member count of every non-empty cluster,
/// summed and divided by n. Exact. Requires labels; empty clusters
/// contribute nothing.
Fraction clustering_accuracy(const ClusterModel& model, const CategoricalDataset& dataset);

/// Number of non-empty clusters whose members all share one class.
std::size_t pure_clusters(const ClusterModel& model, const CategoricalDataset& dataset);

struct ClusterComposition {
    std::size_t size = 0;
    LabelCode dominant_class = 0;   // ties toward the smallest class code
    std::size_t dominant_count = 0;
};

/// Per-cluster class composition, indexed by cluster.
std::vector<ClusterComposition> cluster_compositions(const ClusterModel& model,
                                                     const CategoricalDataset& dataset);

/// Everything one (algorithm, k) run feeds into benchmark tables.
struct RunReport {
    std::string dataset_name;
    std::string algorithm;
    std::size_t k = 0;
    std::size_t n = 0;
    Fraction accuracy;  // r
    Fraction error;     // e = 1 - r, exact
    std::size_t pure_cluster_count = 0;
    std::size_t iterations = 0;
    std::size_t total_swaps = 0;
    bool converged = false;
    double final_cost = 0.0;
    std::vector<double> cost_trace;
    std::vector<ClusterComposition> per_cluster;
    std::vector<std::size_t> seed_indices;

    /// CSV column order, documented in the README:
    /// dataset,algorithm,k,n,accuracy,error,pure_clusters,iterations,
    /// total_swaps,converged,final_cost
    static std::string csv_header();
    std::string csv_row() const;

    /// Multi-line human block (label names resolved against the dataset).
    std::string human(const CategoricalDataset& dataset) const;
};

/// Assembles the report for a finished run. Label-dependent fields are
/// zeroed when the dataset has no labels.
RunReport make_report(std::string dataset_name, const RunResult& result, const CategoricalDataset& dataset);

}  // namespace khist
