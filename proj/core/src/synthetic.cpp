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
#include "khist/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace khist::synth {

namespace {

// Both stand-ins are latent-profile mixtures: a class splits into a handful
// of profiles (party blocs, species), each profile fixes a base value per
// attribute, and individual records deviate from their profile cell by
// cell. That reproduces the strong between-attribute correlations of the
// real files, which independent per-attribute sampling would miss.

std::size_t sample(SplitMix64& rng, std::span<const double> weights) {
    double u = rng.next_double();
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

// Concentrated categorical distribution: a dominant value plus a
// geometrically decaying tail over a shuffled order of the rest.
std::vector<double> concentrated(SplitMix64& rng, std::size_t size, double dominant_mass) {
    std::vector<double> weights(size, 0.0);
    std::vector<std::size_t> order(size);
    for (std::size_t i = 0; i < size; ++i) order[i] = i;
    for (std::size_t i = size - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    double remaining = 1.0;
    double mass = dominant_mass;
    const double decay = rng.uniform(0.3, 0.7);
    for (std::size_t i = 0; i < size; ++i) {
        double w = i + 1 == size ? remaining : std::min(mass, remaining);
        weights[order[i]] = w;
        remaining -= w;
        mass *= decay;
        if (remaining <= 0.0) break;
    }
    return weights;
}

/// Splits `total` over `parts` with skewed random weights, every part >= 1,
/// exact sum (largest-remainder rounding).
std::vector<std::size_t> allocate_counts(SplitMix64& rng, std::size_t total, std::size_t parts) {
    std::vector<double> weights(parts);
    double sum = 0.0;
    for (double& w : weights) {
        const double u = rng.next_double();
        w = 0.05 + u * u * u;  // heavy size skew, like real group sizes
        sum += w;
    }
    std::vector<std::size_t> counts(parts);
    std::vector<std::pair<double, std::size_t>> remainders(parts);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        const double exact = weights[i] / sum * static_cast<double>(total);
        counts[i] = static_cast<std::size_t>(exact);
        remainders[i] = {exact - static_cast<double>(counts[i]), i};
        assigned += counts[i];
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (std::size_t i = 0; assigned < total; ++i, ++assigned) ++counts[remainders[i % parts].second];
    // No empty parts: steal from the largest.
    for (std::size_t i = 0; i < parts; ++i) {
        while (counts[i] == 0) {
            std::size_t largest = 0;
            for (std::size_t j = 1; j < parts; ++j) {
                if (counts[j] > counts[largest]) largest = j;
            }
            --counts[largest];
            ++counts[i];
        }
    }
    return counts;
}

void shuffle_rows(SplitMix64& rng, std::vector<Row>& rows) {
    for (std::size_t i = rows.size() - 1; i > 0; --i) std::swap(rows[i], rows[rng.below(i + 1)]);
}

}  // namespace

std::vector<Row> votes_like_rows(std::uint64_t seed) {
    constexpr std::size_t kIssues = 16;
    constexpr std::size_t kDemocrats = 267;
    constexpr std::size_t kRepublicans = 168;
    constexpr double kOutlierRate = 0.05;

    SplitMix64 rng(seed);

    // Issues differ in how partisan they are: party-line issues separate
    // the parties sharply, nonpartisan ones split both parties near 50/50
    // (where a single mode value is an unstable summary of the cluster).
    struct Issue {
        double yes_democrat;
        double yes_republican;
        double missing;
    };
    std::vector<Issue> issues(kIssues);
    for (Issue& issue : issues) {
        const double kind = rng.next_double();
        if (kind < 0.55) {  // party line
            const double center = rng.uniform(0.40, 0.60);
            const double separation = rng.uniform(0.50, 0.90);
            const bool democrats_favor = rng.next() & 1;
            issue.yes_democrat =
                std::clamp(center + (democrats_favor ? separation : -separation) / 2.0, 0.03, 0.97);
            issue.yes_republican =
                std::clamp(center + (democrats_favor ? -separation : separation) / 2.0, 0.03, 0.97);
        } else if (kind < 0.8) {  // mildly partisan
            const double center = rng.uniform(0.35, 0.65);
            const double separation = rng.uniform(0.10, 0.35);
            const bool democrats_favor = rng.next() & 1;
            issue.yes_democrat =
                std::clamp(center + (democrats_favor ? separation : -separation) / 2.0, 0.03, 0.97);
            issue.yes_republican =
                std::clamp(center + (democrats_favor ? -separation : separation) / 2.0, 0.03, 0.97);
        } else {  // nonpartisan, contested
            const double shared = rng.uniform(0.38, 0.62);
            issue.yes_democrat = shared + rng.uniform(-0.05, 0.05);
            issue.yes_republican = shared + rng.uniform(-0.05, 0.05);
        }
        issue.missing = rng.uniform(0.01, 0.12);
    }

    std::vector<std::string> labels;
    labels.insert(labels.end(), kDemocrats, "democrat");
    labels.insert(labels.end(), kRepublicans, "republican");

    std::vector<Row> rows;
    rows.reserve(labels.size());
    for (const std::string& label : labels) {
        const bool democrat = label == "democrat";
        const bool maverick = rng.next_double() < kOutlierRate;
        Row row;
        row.label = label;
        row.fields.reserve(kIssues);
        for (const Issue& issue : issues) {
            if (rng.next_double() < issue.missing) {
                row.fields.emplace_back("?");
                continue;
            }
            // Mavericks vote like the other party throughout.
            const bool as_democrat = democrat != maverick;
            const double yes = as_democrat ? issue.yes_democrat : issue.yes_republican;
            row.fields.emplace_back(rng.next_double() < yes ? "y" : "n");
        }
        rows.push_back(std::move(row));
    }
    shuffle_rows(rng, rows);
    return rows;
}

std::vector<Row> mushroom_like_rows(std::uint64_t seed) {
    constexpr std::size_t kEdible = 4208;
    constexpr std::size_t kPoisonous = 3916;
    constexpr std::size_t kEdibleProfiles = 12;
    constexpr std::size_t kPoisonousProfiles = 11;

    // Alphabet sizes of the 22 classic attributes; attribute 15 is constant
    // and attribute 10 carries the missing token as one of its values.
    constexpr std::size_t kAlphabet[] = {6, 4, 10, 2, 9, 2, 2, 2, 12, 2, 5,
                                         4, 4, 9,  9, 1, 4, 3, 5, 9, 6, 7};
    constexpr std::size_t kAttributes = std::size(kAlphabet);
    constexpr std::size_t kMissingAttribute = 10;

    SplitMix64 rng(seed);

    // Attribute roles. Class markers behave like odor in the original:
    // concentrated on a per-class dominant value, nearly fixed within any
    // profile. Profile markers spread close to uniformly across profiles
    // regardless of class, so clusters that merge several profiles disagree
    // on them; they carry the group structure, not the class.
    std::vector<bool> class_marker(kAttributes, false);
    std::size_t marker_count = 0;
    for (std::size_t a = 0; a < kAttributes; ++a) {
        if (a == kMissingAttribute || kAlphabet[a] < 2) continue;
        if (rng.next_double() < 0.25) {
            class_marker[a] = true;
            ++marker_count;
        }
    }
    while (marker_count < 3) {  // keep the classes separable
        const std::size_t a = rng.below(kAttributes);
        if (a == kMissingAttribute || kAlphabet[a] < 2 || class_marker[a]) continue;
        class_marker[a] = true;
        ++marker_count;
    }

    // Base-value distributions for profile construction. Markers are
    // sharply class-dominated; the rest lean toward their class tendency
    // but keep enough spread that profiles of one class still differ.
    std::vector<std::vector<double>> edible_dist(kAttributes);
    std::vector<std::vector<double>> poison_dist(kAttributes);
    for (std::size_t a = 0; a < kAttributes; ++a) {
        const std::size_t size = kAlphabet[a];
        if (class_marker[a]) {
            edible_dist[a] = concentrated(rng, size, rng.uniform(0.70, 0.95));
            poison_dist[a] = concentrated(rng, size, rng.uniform(0.70, 0.95));
            continue;
        }
        const double lean = rng.uniform(0.35, 0.75);  // weight of the class tendency
        const double uniform = (1.0 - lean) / static_cast<double>(size);
        std::vector<double> edible_tendency = concentrated(rng, size, rng.uniform(0.35, 0.65));
        std::vector<double> poison_tendency = concentrated(rng, size, rng.uniform(0.35, 0.65));
        edible_dist[a].resize(size);
        poison_dist[a].resize(size);
        for (std::size_t v = 0; v < size; ++v) {
            edible_dist[a][v] = lean * edible_tendency[v] + uniform;
            poison_dist[a][v] = lean * poison_tendency[v] + uniform;
        }
    }

    // A profile fixes most attributes to one value; the rest vary over a
    // small set of near-equiprobable alternatives, the way group members
    // expand combinatorially over a few free characteristics. Flat
    // alternatives make the in-cluster mode an unstable summary while the
    // histogram stays smooth.
    struct Profile {
        const char* label;
        std::vector<std::vector<std::size_t>> allowed;  // per attribute
        std::vector<std::vector<double>> weights;       // matching allowed
        std::size_t rows;
    };

    std::vector<Profile> profiles;
    const auto add_profiles = [&](const char* label, std::size_t count, std::size_t members,
                                  const std::vector<std::vector<double>>& dist) {
        std::vector<std::size_t> sizes = allocate_counts(rng, members, count);
        for (std::size_t p = 0; p < count; ++p) {
            Profile profile;
            profile.label = label;
            profile.rows = sizes[p];
            profile.allowed.resize(kAttributes);
            profile.weights.resize(kAttributes);
            for (std::size_t a = 0; a < kAttributes; ++a) {
                std::size_t set_size = 1;
                if (kAlphabet[a] > 1 && rng.next_double() < 0.22) {
                    set_size = 2 + (rng.next_double() < 0.25 && kAlphabet[a] > 2 ? 1 : 0);
                }
                auto& allowed = profile.allowed[a];
                for (int attempt = 0; allowed.size() < set_size && attempt < 64; ++attempt) {
                    const std::size_t v = sample(rng, dist[a]);
                    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) allowed.push_back(v);
                }
                if (allowed.empty()) allowed.push_back(0);
                auto& weights = profile.weights[a];
                double sum = 0.0;
                for (std::size_t v = 0; v < allowed.size(); ++v) {
                    weights.push_back(rng.uniform(0.35, 0.65));
                    sum += weights.back();
                }
                for (double& w : weights) w /= sum;
            }
            profiles.push_back(std::move(profile));
        }
    };
    add_profiles("e", kEdibleProfiles, kEdible, edible_dist);
    add_profiles("p", kPoisonousProfiles, kPoisonous, poison_dist);

    const auto value_name = [&](std::size_t attribute, std::size_t index) -> std::string {
        if (attribute == kMissingAttribute && index == 0) return "?";
        return std::string(1, static_cast<char>('a' + index));
    };

    constexpr double kStrayRate = 0.015;  // rare off-profile observations
    std::vector<Row> rows;
    rows.reserve(kEdible + kPoisonous);
    for (const Profile& profile : profiles) {
        const auto& dist = profile.label[0] == 'e' ? edible_dist : poison_dist;
        for (std::size_t i = 0; i < profile.rows; ++i) {
            Row row;
            row.label = profile.label;
            row.fields.reserve(kAttributes);
            for (std::size_t a = 0; a < kAttributes; ++a) {
                std::size_t value;
                if (rng.next_double() < kStrayRate) {
                    value = sample(rng, dist[a]);
                } else {
                    value = profile.allowed[a][sample(rng, profile.weights[a])];
                }
                row.fields.push_back(value_name(a, value));
            }
            rows.push_back(std::move(row));
        }
    }
    shuffle_rows(rng, rows);
    return rows;
}

void write_rows_csv(std::ostream& out, std::span<const Row> rows) {
    for (const Row& row : rows) {
        out << row.label;
        for (const std::string& field : row.fields) out << ',' << field;
        out << '\n';
    }
}

CategoricalDataset make_dataset(std::span<const Row> rows) {
    if (rows.empty()) throw ParseError("no rows to intern");
    DatasetBuilder builder(rows.front().fields.size());
    std::vector<std::string_view> fields;
    for (const Row& row : rows) {
        fields.assign(row.fields.begin(), row.fields.end());
        builder.add_labeled_record(row.label, std::span<const std::string_view>(fields));
    }
    return builder.build();
}

}  // namespace khist::synth
