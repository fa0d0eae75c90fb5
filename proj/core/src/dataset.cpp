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
#include "khist/dataset.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace khist {

std::string_view AttributeSchema::decode(std::size_t attribute, ValueCode code) const {
    const Attribute& a = attr(attribute);
    if (code >= a.values.size()) throw UsageError("value code out of range for attribute " + a.name);
    return a.values[code];
}

std::optional<ValueCode> AttributeSchema::encode(std::size_t attribute, std::string_view raw) const {
    const Attribute& a = attr(attribute);
    auto it = a.codes.find(std::string(raw));
    if (it == a.codes.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> CategoricalDataset::label_class_sizes() const {
    std::vector<std::size_t> sizes(label_names_.size(), 0);
    for (LabelCode c : labels_) ++sizes[c];
    return sizes;
}

DatasetBuilder::DatasetBuilder(std::size_t attribute_count) : attribute_count_(attribute_count) {
    if (attribute_count == 0) throw UsageError("dataset needs at least one attribute");
    schema_.attributes_.resize(attribute_count);
    for (std::size_t i = 0; i < attribute_count; ++i) {
        schema_.attributes_[i].name = "A" + std::to_string(i + 1);
    }
}

void DatasetBuilder::set_attribute_names(std::vector<std::string> names) {
    if (names.size() != attribute_count_) throw UsageError("attribute name count mismatch");
    for (std::size_t i = 0; i < names.size(); ++i) schema_.attributes_[i].name = std::move(names[i]);
}

void DatasetBuilder::set_missing_token(std::string token) { schema_.missing_token_ = std::move(token); }

ValueCode DatasetBuilder::intern(std::size_t attribute, std::string_view raw) {
    auto& a = schema_.attributes_[attribute];
    auto it = a.codes.find(std::string(raw));
    if (it != a.codes.end()) return it->second;
    ValueCode code = static_cast<ValueCode>(a.values.size());
    a.values.emplace_back(raw);
    a.codes.emplace(std::string(raw), code);
    return code;
}

LabelCode DatasetBuilder::intern_label(std::string_view raw) {
    auto it = label_codes_.find(std::string(raw));
    if (it != label_codes_.end()) return it->second;
    LabelCode code = static_cast<LabelCode>(label_names_.size());
    label_names_.emplace_back(raw);
    label_codes_.emplace(std::string(raw), code);
    return code;
}

void DatasetBuilder::add_record(std::span<const std::string_view> fields) {
    if (built_) throw UsageError("DatasetBuilder reused after build()");
    if (fields.size() != attribute_count_) throw UsageError("record field count mismatch");
    if (labeled_) throw UsageError("mixing labeled and unlabeled records");
    for (std::size_t i = 0; i < fields.size(); ++i) codes_.push_back(intern(i, fields[i]));
    ++record_count_;
}

void DatasetBuilder::add_record(std::initializer_list<std::string_view> fields) {
    add_record(std::span<const std::string_view>(fields.begin(), fields.size()));
}

void DatasetBuilder::add_labeled_record(std::string_view label, std::span<const std::string_view> fields) {
    if (built_) throw UsageError("DatasetBuilder reused after build()");
    if (fields.size() != attribute_count_) throw UsageError("record field count mismatch");
    if (record_count_ > 0 && !labeled_) throw UsageError("mixing labeled and unlabeled records");
    labeled_ = true;
    labels_.push_back(intern_label(label));
    for (std::size_t i = 0; i < fields.size(); ++i) codes_.push_back(intern(i, fields[i]));
    ++record_count_;
}

void DatasetBuilder::add_labeled_record(std::string_view label, std::initializer_list<std::string_view> fields) {
    add_labeled_record(label, std::span<const std::string_view>(fields.begin(), fields.size()));
}

CategoricalDataset DatasetBuilder::build() {
    if (built_) throw UsageError("DatasetBuilder reused after build()");
    if (record_count_ == 0) throw ParseError("dataset is empty");
    built_ = true;
    std::size_t offset = 0;
    for (auto& a : schema_.attributes_) {
        a.offset = offset;
        offset += a.values.size();
    }
    schema_.total_distinct_ = offset;

    CategoricalDataset out;
    out.schema_ = std::make_shared<AttributeSchema>(std::move(schema_));
    out.codes_ = std::move(codes_);
    out.labels_ = std::move(labels_);
    out.label_names_ = std::move(label_names_);
    out.record_count_ = record_count_;
    return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == delimiter) {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::size_t resolve_label_index(const LabelColumn& col, std::size_t field_count) {
    switch (col.kind) {
        case LabelColumn::Kind::first:
            return 0;
        case LabelColumn::Kind::last:
            return field_count - 1;
        case LabelColumn::Kind::index:
            if (col.index >= field_count) {
                throw ParseError("label column " + std::to_string(col.index) + " out of range for " +
                                 std::to_string(field_count) + " fields");
            }
            return col.index;
        case LabelColumn::Kind::none:
            break;
    }
    throw UsageError("resolve_label_index called without a label column");
}

}  // namespace

CategoricalDataset load_csv(std::istream& source, const LoadOptions& options) {
    const bool has_label = options.label_column.kind != LabelColumn::Kind::none;

    std::string line;
    std::size_t line_number = 0;
    std::size_t field_count = 0;
    std::size_t label_index = 0;
    std::unique_ptr<DatasetBuilder> builder;
    std::vector<std::string> header_names;
    bool header_pending = options.header;

    std::vector<std::string_view> attr_fields;
    while (std::getline(source, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields = split_line(line, options.delimiter);
        if (field_count == 0) {
            field_count = fields.size();
            if (has_label) {
                if (field_count < 2) {
                    throw ParseError("line " + std::to_string(line_number) +
                                     ": need at least two fields when a label column is set");
                }
                label_index = resolve_label_index(options.label_column, field_count);
            }
        } else if (fields.size() != field_count) {
            throw ParseError("line " + std::to_string(line_number) + ": expected " + std::to_string(field_count) +
                             " fields, got " + std::to_string(fields.size()));
        }

        if (header_pending) {
            header_pending = false;
            header_names = std::move(fields);
            continue;
        }

        if (!builder) {
            std::size_t m = has_label ? field_count - 1 : field_count;
            builder = std::make_unique<DatasetBuilder>(m);
            builder->set_missing_token(options.missing_token);
            if (!header_names.empty()) {
                std::vector<std::string> names;
                for (std::size_t i = 0; i < header_names.size(); ++i) {
                    if (has_label && i == label_index) continue;
                    names.push_back(header_names[i]);
                }
                builder->set_attribute_names(std::move(names));
            }
        }

        attr_fields.clear();
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (has_label && i == label_index) continue;
            attr_fields.emplace_back(fields[i]);
        }
        if (has_label) {
            builder->add_labeled_record(fields[label_index], std::span<const std::string_view>(attr_fields));
        } else {
            builder->add_record(std::span<const std::string_view>(attr_fields));
        }
    }

    if (!builder) throw ParseError("input contains no data rows");
    return builder->build();
}

CategoricalDataset load_csv_file(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset file: " + path.string());
    return load_csv(in, options);
}

}  // namespace khist
