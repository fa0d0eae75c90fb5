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
#include <span>

#include "khist/dataset.hpp"
#include "khist/fraction.hpp"
#include "khist/histogram.hpp"

namespace khist {

// Four measures relate a record to other records or to a cluster summary:
//
//   simple_matching  - mismatch count between two records (a metric, 0..m)
//   avg_mismatch     - mean simple-matching distance to a member set
//   summary_mismatch - the same mean computed from the summary alone
//   summary_match    - frequency-weighted match score from the summary;
//                      HIGHER means MORE similar
//
// For a summary S of member set M and any record y:
//   summary_mismatch(S, y) == avg_mismatch(M, y)          (compression)
//   summary_mismatch(S, y) + summary_match(S, y) == m     (conservation)
//
// All results are exact rationals: integer numerators over the member count.

/// Count of attribute positions where two records differ (d1).
std::uint32_t simple_matching(std::span<const ValueCode> x, std::span<const ValueCode> y);

/// Mean simple-matching distance between y and an explicit member set (d2).
/// Brute force over the members; the reference for summary_mismatch.
Fraction avg_mismatch(const CategoricalDataset& dataset, std::span<const std::size_t> member_indices,
                      std::span<const ValueCode> y);

/// Mean mismatch of y against a cluster summary (d3): per attribute, the
/// total frequency of values different from y's, divided by member count.
Fraction summary_mismatch(const ClusterSummary& summary, std::span<const ValueCode> y);

/// Match score of y against a cluster summary (d4): per attribute, the
/// frequency of y's own value, divided by member count. Larger is closer.
Fraction summary_match(const ClusterSummary& summary, std::span<const ValueCode> y);

/// summary_match over per-attribute histograms truncated at a relative
/// frequency threshold in [0,1]: values with frequency/member_count below
/// the threshold are ignored. An attribute whose histogram would truncate
/// to nothing keeps only its most frequent value (ties toward the smallest
/// code). Threshold 0 reproduces summary_match exactly; threshold 1 scores
/// through the per-attribute top value only, the k-modes-style
/// representative.
Fraction avft_score(const ClusterSummary& summary, std::span<const ValueCode> y, const Fraction& threshold);

/// Integer numerator of summary_match (the matched-frequency sum). The
/// clustering loop compares these with cross-multiplied denominators.
std::int64_t match_numerator(const ClusterSummary& summary, std::span<const ValueCode> y);

/// Integer numerator of avft_score.
std::int64_t avft_numerator(const ClusterSummary& summary, std::span<const ValueCode> y,
                            const Fraction& threshold);

}  // namespace khist
