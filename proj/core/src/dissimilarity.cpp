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
#include "khist/dissimilarity.hpp"

namespace khist {

namespace {

void check_threshold(const Fraction& threshold) {
    if (threshold < Fraction(0) || threshold > Fraction(1)) {
        throw UsageError("AVFT threshold must lie in [0, 1], got " + threshold.str());
    }
}

void check_nonempty(const ClusterSummary& summary) {
    if (summary.member_count() == 0) throw UsageError("summary has no members");
}

}  // namespace

std::uint32_t simple_matching(std::span<const ValueCode> x, std::span<const ValueCode> y) {
    if (x.size() != y.size()) throw UsageError("records have different lengths");
    std::uint32_t mismatches = 0;
    for (std::size_t j = 0; j < x.size(); ++j) mismatches += x[j] != y[j];
    return mismatches;
}

Fraction avg_mismatch(const CategoricalDataset& dataset, std::span<const std::size_t> member_indices,
                      std::span<const ValueCode> y) {
    if (member_indices.empty()) throw UsageError("average over an empty member set");
    std::int64_t total = 0;
    for (std::size_t idx : member_indices) total += simple_matching(dataset.record(idx), y);
    return Fraction(total, static_cast<std::int64_t>(member_indices.size()));
}

Fraction summary_mismatch(const ClusterSummary& summary, std::span<const ValueCode> y) {
    check_nonempty(summary);
    if (y.size() != summary.attribute_count()) throw UsageError("record length does not match summary");
    const std::int64_t count = summary.member_count();
    std::int64_t mismatch_mass = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        mismatch_mass += count - summary.frequency(j, y[j]);
    }
    return Fraction(mismatch_mass, count);
}

std::int64_t match_numerator(const ClusterSummary& summary, std::span<const ValueCode> y) {
    std::int64_t match_mass = 0;
    for (std::size_t j = 0; j < y.size(); ++j) match_mass += summary.frequency(j, y[j]);
    return match_mass;
}

Fraction summary_match(const ClusterSummary& summary, std::span<const ValueCode> y) {
    check_nonempty(summary);
    if (y.size() != summary.attribute_count()) throw UsageError("record length does not match summary");
    return Fraction(match_numerator(summary, y), summary.member_count());
}

std::int64_t avft_numerator(const ClusterSummary& summary, std::span<const ValueCode> y,
                            const Fraction& threshold) {
    const std::int64_t count = summary.member_count();
    const std::int64_t t_num = threshold.numerator();
    const std::int64_t t_den = threshold.denominator();
    const std::span<const std::uint32_t> counts = summary.raw_counts();
    const AttributeSchema& schema = summary.schema();

    std::int64_t match_mass = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        const std::size_t offset = schema.value_offset(j);
        const std::uint32_t p = schema.distinct_count(j);
        const std::uint32_t f_y = y[j] < p ? counts[offset + y[j]] : 0;

        // A value survives truncation when f / count >= threshold, decided
        // exactly: f * t_den >= t_num * count.
        const auto survives = [&](std::uint32_t f) {
            return static_cast<std::int64_t>(f) * t_den >= t_num * count;
        };

        std::uint32_t max_f = 0;
        ValueCode argmax = 0;
        for (std::uint32_t v = 0; v < p; ++v) {
            if (counts[offset + v] > max_f) {
                max_f = counts[offset + v];
                argmax = v;
            }
        }

        if (survives(max_f)) {
            if (survives(f_y)) match_mass += f_y;
        } else {
            // Truncation would empty this attribute: fall back to its most
            // frequent value alone.
            if (y[j] == argmax) match_mass += f_y;
        }
    }
    return match_mass;
}

Fraction avft_score(const ClusterSummary& summary, std::span<const ValueCode> y, const Fraction& threshold) {
    check_threshold(threshold);
    check_nonempty(summary);
    if (y.size() != summary.attribute_count()) throw UsageError("record length does not match summary");
    return Fraction(avft_numerator(summary, y, threshold), summary.member_count());
}

}  // namespace khist
