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
#include "khist/histogram.hpp"

#include <iomanip>
#include <ostream>

namespace khist {

std::vector<HistogramEntry> HistogramView::entries() const {
    std::vector<HistogramEntry> out;
    for (std::size_t v = 0; v < counts_.size(); ++v) {
        if (counts_[v] != 0) out.push_back({static_cast<ValueCode>(v), counts_[v]});
    }
    return out;
}

ValueCode HistogramView::mode() const {
    ValueCode best = 0;
    std::uint32_t best_freq = 0;
    for (std::size_t v = 0; v < counts_.size(); ++v) {
        if (counts_[v] > best_freq) {
            best_freq = counts_[v];
            best = static_cast<ValueCode>(v);
        }
    }
    if (best_freq == 0) throw UsageError("mode of an empty histogram");
    return best;
}

ClusterSummary::ClusterSummary(std::shared_ptr<const AttributeSchema> schema) : schema_(std::move(schema)) {
    if (!schema_) throw UsageError("ClusterSummary needs a schema");
    counts_.assign(schema_->total_distinct(), 0);
}

void ClusterSummary::check_record(std::span<const ValueCode> record) const {
    if (record.size() != schema_->attribute_count()) {
        throw UsageError("record length does not match schema");
    }
}

void ClusterSummary::add(std::span<const ValueCode> record) {
    check_record(record);
    for (std::size_t i = 0; i < record.size(); ++i) {
        ++counts_[schema_->value_offset(i) + record[i]];
    }
    ++member_count_;
}

void ClusterSummary::remove(std::span<const ValueCode> record) {
    check_record(record);
    if (member_count_ == 0) throw IntegrityError("remove from an empty summary");
    for (std::size_t i = 0; i < record.size(); ++i) {
        std::uint32_t& cell = counts_[schema_->value_offset(i) + record[i]];
        if (cell == 0) {
            throw IntegrityError("remove of a value with zero frequency (attribute " +
                                 schema_->attribute_name(i) + ")");
        }
        --cell;
    }
    --member_count_;
}

std::uint32_t ClusterSummary::frequency(std::size_t attribute, ValueCode value) const {
    if (value >= schema_->distinct_count(attribute)) return 0;
    return counts_[schema_->value_offset(attribute) + value];
}

HistogramView ClusterSummary::histogram(std::size_t attribute) const {
    return HistogramView(
        std::span<const std::uint32_t>(counts_.data() + schema_->value_offset(attribute),
                                       schema_->distinct_count(attribute)),
        attribute);
}

std::vector<ValueCode> ClusterSummary::mode() const {
    if (member_count_ == 0) throw UsageError("mode of an empty summary");
    std::vector<ValueCode> out(schema_->attribute_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = histogram(i).mode();
    return out;
}

ClusterSummary build_histogram(const CategoricalDataset& dataset, std::span<const std::size_t> member_indices) {
    for (std::size_t idx : member_indices) {
        if (idx >= dataset.record_count()) {
            throw UsageError("member index " + std::to_string(idx) + " out of range");
        }
    }
    ClusterSummary summary(dataset.schema_ptr());
    for (std::size_t idx : member_indices) summary.add(dataset.record(idx));
    return summary;
}

void describe_summary(std::ostream& out, const ClusterSummary& summary) {
    const AttributeSchema& schema = summary.schema();
    const double count = summary.member_count();
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
        out << "  " << schema.attribute_name(a) << ":";
        bool firstEntry = true;
        for (const HistogramEntry& e : summary.histogram(a).entries()) {
            out << (firstEntry ? " " : ", ") << schema.decode(a, e.value) << "=" << e.frequency;
            out << " (" << std::fixed << std::setprecision(3) << (count > 0 ? e.frequency / count : 0.0) << ")";
            firstEntry = false;
        }
        if (firstEntry) out << " (empty)";
        out << "\n";
        out.unsetf(std::ios::fixed);
    }
}

}  // namespace khist
