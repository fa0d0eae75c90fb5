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
#include <memory>
#include <span>
#include <vector>

#include "khist/dataset.hpp"
#include "khist/errors.hpp"

namespace khist {

struct HistogramEntry {
    ValueCode value;
    std::uint32_t frequency;

    friend bool operator==(const HistogramEntry&, const HistogramEntry&) = default;
};

/// Read-only view of one attribute's value-frequency table.
///
/// Backed by a dense count array of length p_i; entries() reports only the
/// values with nonzero frequency.
class HistogramView {
public:
    HistogramView(std::span<const std::uint32_t> counts, std::size_t attribute)
        : counts_(counts), attribute_(attribute) {}

    std::size_t attribute() const { return attribute_; }

    std::uint32_t frequency(ValueCode value) const {
        return value < counts_.size() ? counts_[value] : 0;
    }

    /// Nonzero (value, frequency) pairs in value-code order.
    std::vector<HistogramEntry> entries() const;

    /// Value with maximal frequency; ties break toward the smallest code.
    ValueCode mode() const;

    std::span<const std::uint32_t> raw() const { return counts_; }

private:
    std::span<const std::uint32_t> counts_;
    std::size_t attribute_;
};

/// Per-attribute frequency tables plus member count for one cluster.
///
/// The clustering loop mutates summaries one object at a time; add and
/// remove are O(m). Counts are stored as dense arrays over each attribute's
/// value codes, so kernel lookups are direct indexing. Copying a summary
/// yields an independent snapshot.
class ClusterSummary {
public:
    explicit ClusterSummary(std::shared_ptr<const AttributeSchema> schema);

    const AttributeSchema& schema() const { return *schema_; }
    std::size_t attribute_count() const { return schema_->attribute_count(); }
    std::uint32_t member_count() const { return member_count_; }

    /// Counts the record into every attribute's table.
    void add(std::span<const ValueCode> record);

    /// Reverse of add. Decrementing a zero frequency means the caller's
    /// bookkeeping is broken and raises IntegrityError.
    void remove(std::span<const ValueCode> record);

    std::uint32_t frequency(std::size_t attribute, ValueCode value) const;

    HistogramView histogram(std::size_t attribute) const;

    /// Per-attribute most frequent value (ties toward the smallest code).
    /// The k-modes cluster representative.
    std::vector<ValueCode> mode() const;

    /// Flat count array (attribute blocks laid out per schema offsets).
    std::span<const std::uint32_t> raw_counts() const { return counts_; }

private:
    void check_record(std::span<const ValueCode> record) const;

    std::shared_ptr<const AttributeSchema> schema_;
    std::vector<std::uint32_t> counts_;
    std::uint32_t member_count_ = 0;
};

/// Builds the summary of an explicit member set by direct counting.
/// The reference producer for everything the incremental path maintains.
ClusterSummary build_histogram(const CategoricalDataset& dataset, std::span<const std::size_t> member_indices);

/// Human-readable table of one summary: per attribute, each value with its
/// frequency and relative frequency. Used by the CLI cluster description.
void describe_summary(std::ostream& out, const ClusterSummary& summary);

}  // namespace khist
