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
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "khist/errors.hpp"

namespace khist {

/// Dense per-attribute code for one categorical value.
using ValueCode = std::uint32_t;

/// Dense code for one class label.
using LabelCode = std::uint32_t;

/// Per-attribute value dictionaries of a loaded dataset.
///
/// Codes are dense 0..p_i-1 in first-occurrence order, so distance kernels
/// are plain array lookups. Dictionaries are bijections between raw strings
/// and codes; comparison is case-sensitive.
class AttributeSchema {
public:
    std::size_t attribute_count() const { return attributes_.size(); }

    /// Number of distinct values seen for one attribute (p_i, always >= 1).
    std::uint32_t distinct_count(std::size_t attribute) const {
        return static_cast<std::uint32_t>(attr(attribute).values.size());
    }

    /// Base index of this attribute's block in a flat frequency layout.
    std::size_t value_offset(std::size_t attribute) const { return attr(attribute).offset; }

    /// Sum of distinct counts over all attributes (flat layout size).
    std::size_t total_distinct() const { return total_distinct_; }

    std::string_view decode(std::size_t attribute, ValueCode code) const;

    /// Code of a raw value, or nullopt when the value never occurred.
    std::optional<ValueCode> encode(std::size_t attribute, std::string_view raw) const;

    const std::string& attribute_name(std::size_t attribute) const { return attr(attribute).name; }

    /// Token that marks missing entries in the source file. Missing entries
    /// are interned as ordinary values; the token is kept for reporting.
    const std::string& missing_token() const { return missing_token_; }

private:
    friend class DatasetBuilder;

    struct Attribute {
        std::string name;
        std::vector<std::string> values;                          // code -> raw
        std::unordered_map<std::string, ValueCode> codes;         // raw -> code
        std::size_t offset = 0;
    };

    const Attribute& attr(std::size_t attribute) const {
        if (attribute >= attributes_.size()) throw UsageError("attribute index out of range");
        return attributes_[attribute];
    }

    std::vector<Attribute> attributes_;
    std::size_t total_distinct_ = 0;
    std::string missing_token_ = "?";
};

/// Immutable interned record matrix plus schema and optional class labels.
///
/// Record order is exactly the source order; the clustering algorithm is
/// order-dependent, so order is part of the data contract. Safe to share
/// across threads after construction.
class CategoricalDataset {
public:
    const AttributeSchema& schema() const { return *schema_; }
    std::shared_ptr<const AttributeSchema> schema_ptr() const { return schema_; }

    std::size_t record_count() const { return record_count_; }
    std::size_t attribute_count() const { return schema_->attribute_count(); }

    std::span<const ValueCode> record(std::size_t index) const {
        if (index >= record_count_) throw UsageError("record index out of range");
        return {codes_.data() + index * attribute_count(), attribute_count()};
    }

    bool has_labels() const { return !labels_.empty(); }
    LabelCode label(std::size_t index) const { return labels_.at(index); }
    std::span<const LabelCode> labels() const { return labels_; }

    std::size_t label_class_count() const { return label_names_.size(); }
    const std::string& label_name(LabelCode code) const { return label_names_.at(code); }

    /// Members per class, indexed by label code.
    std::vector<std::size_t> label_class_sizes() const;

private:
    friend class DatasetBuilder;

    std::shared_ptr<const AttributeSchema> schema_;
    std::vector<ValueCode> codes_;  // n * m, row major
    std::vector<LabelCode> labels_;
    std::vector<std::string> label_names_;
    std::size_t record_count_ = 0;
};

/// One-shot builder used by the CSV loader and by tests that construct
/// datasets programmatically.
class DatasetBuilder {
public:
    explicit DatasetBuilder(std::size_t attribute_count);

    void set_attribute_names(std::vector<std::string> names);
    void set_missing_token(std::string token);

    void add_record(std::span<const std::string_view> fields);
    void add_record(std::initializer_list<std::string_view> fields);

    void add_labeled_record(std::string_view label, std::span<const std::string_view> fields);
    void add_labeled_record(std::string_view label, std::initializer_list<std::string_view> fields);

    /// Finalizes the dataset. The builder must not be reused afterwards.
    CategoricalDataset build();

private:
    ValueCode intern(std::size_t attribute, std::string_view raw);
    LabelCode intern_label(std::string_view raw);

    std::size_t attribute_count_;
    AttributeSchema schema_;
    std::vector<ValueCode> codes_;
    std::vector<LabelCode> labels_;
    std::vector<std::string> label_names_;
    std::unordered_map<std::string, LabelCode> label_codes_;
    std::size_t record_count_ = 0;
    bool labeled_ = false;
    bool built_ = false;
};

/// Which input column, if any, holds the class label.
struct LabelColumn {
    enum class Kind { none, first, last, index };
    Kind kind = Kind::none;
    std::size_t index = 0;  // used when kind == index

    static LabelColumn none() { return {Kind::none, 0}; }
    static LabelColumn first() { return {Kind::first, 0}; }
    static LabelColumn last() { return {Kind::last, 0}; }
    static LabelColumn at(std::size_t i) { return {Kind::index, i}; }
};

struct LoadOptions {
    char delimiter = ',';
    LabelColumn label_column = LabelColumn::none();
    std::string missing_token = "?";
    bool header = false;
};

/// Parses delimiter-separated text into an interned dataset.
///
/// Every row must have the same field count; a ragged row raises ParseError
/// naming the line. Fully empty lines are skipped. The missing token is
/// interned like any other category value.
CategoricalDataset load_csv(std::istream& source, const LoadOptions& options = {});

CategoricalDataset load_csv_file(const std::filesystem::path& path, const LoadOptions& options = {});

}  // namespace khist
