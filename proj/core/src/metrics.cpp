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
#include "khist/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace khist {

namespace {

void check_labels(const CategoricalDataset& dataset) {
    if (!dataset.has_labels()) throw MissingLabelsError("dataset has no class labels");
}

void check_model(const ClusterModel& model, const CategoricalDataset& dataset) {
    if (model.assignments.size() != dataset.record_count()) {
        throw UsageError("model does not match dataset (assignment count differs)");
    }
}

// Class counts per cluster, [cluster][class].
std::vector<std::vector<std::size_t>> class_counts(const ClusterModel& model,
                                                   const CategoricalDataset& dataset) {
    std::vector<std::vector<std::size_t>> counts(model.k,
                                                 std::vector<std::size_t>(dataset.label_class_count(), 0));
    for (std::size_t i = 0; i < dataset.record_count(); ++i) {
        ++counts[model.assignments[i]][dataset.label(i)];
    }
    return counts;
}

}  // namespace

Fraction clustering_accuracy(const ClusterModel& model, const CategoricalDataset& dataset) {
    check_labels(dataset);
    check_model(model, dataset);
    std::int64_t dominant_total = 0;
    for (const auto& cluster : class_counts(model, dataset)) {
        std::size_t best = 0;
        for (std::size_t count : cluster) best = std::max(best, count);
        dominant_total += static_cast<std::int64_t>(best);
    }
    return Fraction(dominant_total, static_cast<std::int64_t>(dataset.record_count()));
}

std::size_t pure_clusters(const ClusterModel& model, const CategoricalDataset& dataset) {
    check_labels(dataset);
    check_model(model, dataset);
    std::size_t pure = 0;
    for (const auto& cluster : class_counts(model, dataset)) {
        std::size_t size = 0;
        std::size_t classes = 0;
        for (std::size_t count : cluster) {
            size += count;
            classes += count > 0;
        }
        if (size > 0 && classes == 1) ++pure;
    }
    return pure;
}

std::vector<ClusterComposition> cluster_compositions(const ClusterModel& model,
                                                     const CategoricalDataset& dataset) {
    check_labels(dataset);
    check_model(model, dataset);
    std::vector<ClusterComposition> out;
    for (const auto& cluster : class_counts(model, dataset)) {
        ClusterComposition comp;
        for (std::size_t cls = 0; cls < cluster.size(); ++cls) {
            comp.size += cluster[cls];
            if (cluster[cls] > comp.dominant_count) {
                comp.dominant_count = cluster[cls];
                comp.dominant_class = static_cast<LabelCode>(cls);
            }
        }
        out.push_back(comp);
    }
    return out;
}

std::string RunReport::csv_header() {
    return "dataset,algorithm,k,n,accuracy,error,pure_clusters,iterations,total_swaps,converged,final_cost";
}

namespace {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace

std::string RunReport::csv_row() const {
    std::ostringstream out;
    out << dataset_name << ',' << algorithm << ',' << k << ',' << n << ',' << format_double(accuracy.to_double())
        << ',' << format_double(error.to_double()) << ',' << pure_cluster_count << ',' << iterations << ','
        << total_swaps << ',' << (converged ? 1 : 0) << ',' << format_double(final_cost);
    return out.str();
}

std::string RunReport::human(const CategoricalDataset& dataset) const {
    std::ostringstream out;
    out << "dataset: " << dataset_name << " (n=" << n << ", m=" << dataset.attribute_count() << ")\n";
    out << "algorithm: " << algorithm << "  k=" << k << "\n";
    if (dataset.has_labels()) {
        out << "accuracy: " << format_double(accuracy.to_double()) << " (" << accuracy.str() << ")"
            << "  error: " << format_double(error.to_double()) << "\n";
        out << "pure clusters: " << pure_cluster_count << " of " << k << "\n";
    }
    out << "iterations: " << iterations << "  total swaps: " << total_swaps << "  converged: "
        << (converged ? "yes" : "no") << "\n";
    out << "final cost (match form): " << format_double(final_cost) << "\n";
    if (dataset.has_labels()) {
        for (std::size_t c = 0; c < per_cluster.size(); ++c) {
            const ClusterComposition& comp = per_cluster[c];
            out << "cluster " << c << ": size=" << comp.size;
            if (comp.size > 0) {
                out << " dominant=" << dataset.label_name(comp.dominant_class) << " (" << comp.dominant_count
                    << ")";
            }
            out << "\n";
        }
    }
    out << "seeds:";
    for (std::size_t s : seed_indices) out << ' ' << s;
    out << "\n";
    return out.str();
}

RunReport make_report(std::string dataset_name, const RunResult& result, const CategoricalDataset& dataset) {
    RunReport report;
    report.dataset_name = std::move(dataset_name);
    report.algorithm = result.model.algorithm.name();
    report.k = result.model.k;
    report.n = dataset.record_count();
    if (dataset.has_labels()) {
        report.accuracy = clustering_accuracy(result.model, dataset);
        report.error = Fraction(1) - report.accuracy;
        report.pure_cluster_count = pure_clusters(result.model, dataset);
        report.per_cluster = cluster_compositions(result.model, dataset);
    }
    report.iterations = result.stats.iterations;
    report.total_swaps = result.stats.total_swaps();
    report.converged = result.stats.converged;
    report.cost_trace = result.stats.cost_trace;
    report.final_cost = result.stats.cost_trace.empty() ? 0.0 : result.stats.cost_trace.back();
    report.seed_indices = result.model.seed_indices;
    return report;
}

}  // namespace khist
