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

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "khist/clustering.hpp"
#include "khist/dataset.hpp"
#include "khist/fraction.hpp"
#include "khist/histogram.hpp"
#include "khist/synthetic.hpp"

namespace khist::test {

using synth::SplitMix64;

// ---------------------------------------------------------------------------
// Small dataset builders

inline CategoricalDataset dataset_from_rows(const std::vector<std::vector<std::string>>& rows,
                                            const std::vector<std::string>* labels = nullptr) {
    DatasetBuilder builder(rows.at(0).size());
    std::vector<std::string_view> fields;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        fields.assign(rows[i].begin(), rows[i].end());
        if (labels) {
            builder.add_labeled_record((*labels)[i], std::span<const std::string_view>(fields));
        } else {
            builder.add_record(std::span<const std::string_view>(fields));
        }
    }
    return builder.build();
}

/// Random dataset over alphabets "v0".."v{p-1}", optionally labeled with
/// classes "c0".."c{classes-1}".
inline CategoricalDataset random_dataset(SplitMix64& rng, std::size_t n, std::size_t m, std::size_t p,
                                         std::size_t classes = 0) {
    std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(m));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) rows[i][j] = "v" + std::to_string(rng.below(p));
        if (classes > 0) labels[i] = "c" + std::to_string(rng.below(classes));
    }
    return dataset_from_rows(rows, classes > 0 ? &labels : nullptr);
}

// ---------------------------------------------------------------------------
// Independent oracles. Deliberately dumb: nested loops and maps only, no
// shared code with the kernels they check.

struct NaiveHistogram {
    std::vector<std::map<ValueCode, std::uint32_t>> frequencies;  // one map per attribute
    std::size_t member_count = 0;
};

/// Reference histogram by direct counting.
inline NaiveHistogram naive_histogram(const CategoricalDataset& dataset,
                                      const std::vector<std::size_t>& members) {
    NaiveHistogram out;
    out.frequencies.resize(dataset.attribute_count());
    for (std::size_t idx : members) {
        auto rec = dataset.record(idx);
        for (std::size_t j = 0; j < rec.size(); ++j) ++out.frequencies[j][rec[j]];
        ++out.member_count;
    }
    return out;
}

/// True when a maintained summary matches the naive recount exactly
/// (absent map keys correspond to zero cells).
inline bool summary_matches_naive(const ClusterSummary& summary, const NaiveHistogram& naive) {
    if (summary.member_count() != naive.member_count) return false;
    for (std::size_t j = 0; j < summary.attribute_count(); ++j) {
        const std::uint32_t p = summary.schema().distinct_count(j);
        for (ValueCode v = 0; v < p; ++v) {
            auto it = naive.frequencies[j].find(v);
            const std::uint32_t expected = it == naive.frequencies[j].end() ? 0 : it->second;
            if (summary.frequency(j, v) != expected) return false;
        }
    }
    return true;
}

/// Reference mismatch count between two records.
inline std::uint32_t naive_mismatch(std::span<const ValueCode> a, std::span<const ValueCode> b) {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < a.size(); ++j) out += a[j] != b[j] ? 1 : 0;
    return out;
}

/// Reference mean mismatch of y against a member set.
inline Fraction naive_avg_mismatch(const CategoricalDataset& dataset, const std::vector<std::size_t>& members,
                                   std::span<const ValueCode> y) {
    std::int64_t total = 0;
    for (std::size_t idx : members) total += naive_mismatch(dataset.record(idx), y);
    return Fraction(total, static_cast<std::int64_t>(members.size()));
}

/// Mismatch mass of one attribute written as the full sum over every value
/// (frequency times the 0/1 mismatch indicator).
inline std::int64_t mismatch_mass_full_sum(const ClusterSummary& summary, std::size_t attribute, ValueCode y) {
    std::int64_t mass = 0;
    const std::uint32_t p = summary.schema().distinct_count(attribute);
    for (ValueCode v = 0; v < p; ++v) {
        mass += static_cast<std::int64_t>(summary.frequency(attribute, v)) * (v != y ? 1 : 0);
    }
    return mass;
}

/// Match mass of one attribute as the full sum with the inverted indicator.
inline std::int64_t match_mass_full_sum(const ClusterSummary& summary, std::size_t attribute, ValueCode y) {
    std::int64_t mass = 0;
    const std::uint32_t p = summary.schema().distinct_count(attribute);
    for (ValueCode v = 0; v < p; ++v) {
        mass += static_cast<std::int64_t>(summary.frequency(attribute, v)) * (v != y ? 0 : 1);
    }
    return mass;
}

/// Calls fn for every assignment of n objects onto exactly k non-empty
/// clusters (labeled assignments; cost is label-invariant anyway).
inline void for_each_full_partition(std::size_t n, std::size_t k,
                                    const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> assign(n, 0);
    while (true) {
        std::vector<bool> used(k, false);
        for (std::uint32_t a : assign) used[a] = true;
        bool all = true;
        for (bool u : used) all = all && u;
        if (all) fn(assign);

        std::size_t pos = 0;
        while (pos < n) {
            if (++assign[pos] < k) break;
            assign[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
}

/// Exact match-form cost of an assignment, straight from the definition:
/// for every object, count value matches against each member of its own
/// cluster, divide by the cluster size. No summaries involved.
inline Fraction partition_cost_oracle(const CategoricalDataset& dataset,
                                      const std::vector<std::uint32_t>& assignments, std::size_t k) {
    Fraction total(0);
    for (std::size_t i = 0; i < dataset.record_count(); ++i) {
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < dataset.record_count(); ++j) {
            if (assignments[j] == assignments[i]) members.push_back(j);
        }
        std::int64_t matches = 0;
        auto rec = dataset.record(i);
        for (std::size_t member : members) {
            auto other = dataset.record(member);
            for (std::size_t a = 0; a < rec.size(); ++a) matches += rec[a] == other[a] ? 1 : 0;
        }
        total = total + Fraction(matches, static_cast<std::int64_t>(members.size()));
    }
    (void)k;
    return total;
}

// ---------------------------------------------------------------------------
// Filesystem helpers

class TempDir {
public:
    TempDir() {
        static std::uint64_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("khist-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

}  // namespace khist::test
