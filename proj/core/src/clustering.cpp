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
#include "khist/clustering.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <string_view>
#include <unordered_set>

namespace khist {

std::string AlgorithmTag::name() const {
    switch (kind) {
        case AlgorithmKind::khistograms:
            return "khist";
        case AlgorithmKind::kmodes:
            return "kmodes";
        case AlgorithmKind::avft:
            return "avft(" + threshold.str() + ")";
    }
    return "?";
}

AlgorithmTag AlgorithmTag::parse(std::string_view text) {
    if (text == "khist" || text == "khistograms") return khistograms();
    if (text == "kmodes") return kmodes();
    if (text == "avft") return avft(Fraction(0));
    if (text.starts_with("avft(") && text.ends_with(")")) {
        return avft(Fraction::parse(text.substr(5, text.size() - 6)));
    }
    throw UsageError("unknown algorithm '" + std::string(text) + "' (expected khist, kmodes or avft)");
}

std::size_t ConvergenceStats::total_swaps() const {
    return std::accumulate(swaps_per_iteration.begin(), swaps_per_iteration.end(), std::size_t{0});
}

std::vector<std::size_t> seed_first_k_distinct(const CategoricalDataset& dataset, std::size_t k) {
    if (k == 0) throw UsageError("k must be at least 1");
    const std::size_t m = dataset.attribute_count();

    // Records hash as raw byte strings over their dense codes; the code
    // buffer is stable for the dataset's lifetime.
    std::unordered_set<std::string_view> seen;
    seen.reserve(k * 2);
    std::vector<std::size_t> seeds;
    seeds.reserve(k);

    std::size_t distinct = 0;
    for (std::size_t i = 0; i < dataset.record_count(); ++i) {
        std::span<const ValueCode> rec = dataset.record(i);
        std::string_view key(reinterpret_cast<const char*>(rec.data()), m * sizeof(ValueCode));
        if (!seen.insert(key).second) continue;
        ++distinct;
        if (seeds.size() < k) {
            seeds.push_back(i);
            if (seeds.size() == k) return seeds;
        }
    }
    throw DataError("need " + std::to_string(k) + " distinct records for seeding, dataset has only " +
                    std::to_string(distinct));
}

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// Exact score of one (object, cluster) pair. num/den is a match fraction
// for the histogram scorers and a plain mismatch count (den = 1) for the
// mode scorer. Cross products stay far below int64 range for any dataset
// with n * m * n < 2^63.
struct Score {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

struct EngineState {
    const CategoricalDataset& data;
    const RunConfig& cfg;
    std::size_t n;
    std::size_t m;
    std::size_t k;
    std::vector<ClusterSummary> summaries;
    std::vector<std::vector<ValueCode>> modes;  // maintained by the kmodes policy
    std::vector<std::uint32_t> assignments;
    std::vector<std::size_t> flat;  // n*m precomputed offsets into count arrays

    EngineState(const CategoricalDataset& dataset, const RunConfig& config, std::size_t clusters)
        : data(dataset),
          cfg(config),
          n(dataset.record_count()),
          m(dataset.attribute_count()),
          k(clusters),
          assignments(dataset.record_count(), kUnassigned) {
        summaries.reserve(k);
        for (std::size_t c = 0; c < k; ++c) summaries.emplace_back(dataset.schema_ptr());
        const AttributeSchema& schema = dataset.schema();
        flat.resize(n * m);
        for (std::size_t i = 0; i < n; ++i) {
            std::span<const ValueCode> rec = dataset.record(i);
            for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = schema.value_offset(j) + rec[j];
        }
    }

    std::int64_t score_den(std::size_t cluster) const {
        return cfg.denominator == DenominatorMode::cluster
                   ? static_cast<std::int64_t>(summaries[cluster].member_count())
                   : static_cast<std::int64_t>(n);
    }

    std::span<const std::size_t> flat_record(std::size_t object) const { return {flat.data() + object * m, m}; }

    double sweep_cost() const {
        // Match-form cost: per cluster, the members' summed match numerators
        // equal the sum of squared frequencies, so no pass over objects is
        // needed. Accumulated in cluster order for determinism.
        double total = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            std::int64_t squares = 0;
            for (std::uint32_t f : summaries[c].raw_counts()) {
                squares += static_cast<std::int64_t>(f) * f;
            }
            total += static_cast<double>(squares) / static_cast<double>(score_den(c));
        }
        return total;
    }

    void validate_against_assignments() const {
        std::vector<std::vector<std::size_t>> members(k);
        for (std::size_t i = 0; i < n; ++i) {
            if (assignments[i] >= k) throw IntegrityError("object with invalid cluster index");
            members[assignments[i]].push_back(i);
        }
        for (std::size_t c = 0; c < k; ++c) {
            ClusterSummary rebuilt = build_histogram(data, members[c]);
            if (rebuilt.member_count() != summaries[c].member_count()) {
                throw IntegrityError("maintained member count diverged for cluster " + std::to_string(c));
            }
            std::span<const std::uint32_t> a = rebuilt.raw_counts();
            std::span<const std::uint32_t> b = summaries[c].raw_counts();
            for (std::size_t idx = 0; idx < a.size(); ++idx) {
                if (a[idx] != b[idx]) {
                    throw IntegrityError("maintained histogram diverged for cluster " + std::to_string(c));
                }
            }
        }
    }
};

// Scoring policies plugged into the shared loop. Each exposes:
//   score(state, cluster, object)  exact Score, higher-is-better per better()
//   better(a, b)                   strict preference between scores
//   on_change(state, cluster)      hook after a membership change
//   format(score)                  stable text for trace lines

struct HistogramPolicy {
    Score score(const EngineState& e, std::size_t c, std::size_t object) const {
        const std::uint32_t* counts = e.summaries[c].raw_counts().data();
        std::int64_t num = 0;
        for (std::size_t idx : e.flat_record(object)) num += counts[idx];
        return {num, e.score_den(c)};
    }
    static bool better(const Score& a, const Score& b) { return a.num * b.den > b.num * a.den; }
    static void on_change(EngineState&, std::size_t) {}
    static std::string format(const Score& s) { return Fraction(s.num, s.den).str(); }
};

struct AvftPolicy {
    std::int64_t t_num;
    std::int64_t t_den;

    Score score(const EngineState& e, std::size_t c, std::size_t object) const {
        const ClusterSummary& summary = e.summaries[c];
        const std::uint32_t* counts = summary.raw_counts().data();
        const AttributeSchema& schema = e.data.schema();
        const std::int64_t count = summary.member_count();
        std::span<const std::size_t> rec = e.flat_record(object);

        std::int64_t num = 0;
        for (std::size_t j = 0; j < e.m; ++j) {
            const std::size_t base = schema.value_offset(j);
            const std::uint32_t p = schema.distinct_count(j);
            const std::uint32_t f_y = counts[rec[j]];

            std::uint32_t max_f = 0;
            std::uint32_t argmax = 0;
            for (std::uint32_t v = 0; v < p; ++v) {
                if (counts[base + v] > max_f) {
                    max_f = counts[base + v];
                    argmax = v;
                }
            }
            if (static_cast<std::int64_t>(max_f) * t_den >= t_num * count) {
                if (static_cast<std::int64_t>(f_y) * t_den >= t_num * count) num += f_y;
            } else if (rec[j] == base + argmax) {
                num += f_y;
            }
        }
        return {num, e.score_den(c)};
    }
    static bool better(const Score& a, const Score& b) { return a.num * b.den > b.num * a.den; }
    static void on_change(EngineState&, std::size_t) {}
    static std::string format(const Score& s) { return Fraction(s.num, s.den).str(); }
};

struct ModePolicy {
    Score score(const EngineState& e, std::size_t c, std::size_t object) const {
        std::span<const ValueCode> rec = e.data.record(object);
        const std::vector<ValueCode>& mode = e.modes[c];
        std::int64_t mismatches = 0;
        for (std::size_t j = 0; j < e.m; ++j) mismatches += rec[j] != mode[j];
        return {mismatches, 1};
    }
    static bool better(const Score& a, const Score& b) { return a.num < b.num; }
    static void on_change(EngineState& e, std::size_t c) { e.modes[c] = e.summaries[c].mode(); }
    static std::string format(const Score& s) { return std::to_string(s.num); }
};

template <class Policy>
RunResult run_loop(const CategoricalDataset& dataset, std::size_t k, const RunConfig& cfg,
                   const AlgorithmTag& tag, Policy policy, bool keep_modes) {
    if (cfg.max_iterations == 0) throw UsageError("max_iterations must be at least 1");

    std::vector<std::size_t> seeds = seed_first_k_distinct(dataset, k);
    EngineState e(dataset, cfg, k);
    if (keep_modes) e.modes.resize(k);

    // Step 1: each seed record forms a singleton cluster.
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t i = seeds[c];
        e.assignments[i] = static_cast<std::uint32_t>(c);
        e.summaries[c].add(dataset.record(i));
        policy.on_change(e, c);
    }

    // Step 2: allocate the remaining objects in file order, updating the
    // receiving summary immediately. Ties go to the lowest cluster index.
    for (std::size_t i = 0; i < e.n; ++i) {
        if (e.assignments[i] != kUnassigned) continue;
        std::size_t best = 0;
        Score best_score = policy.score(e, 0, i);
        for (std::size_t c = 1; c < k; ++c) {
            Score s = policy.score(e, c, i);
            if (policy.better(s, best_score)) {
                best = c;
                best_score = s;
            }
        }
        e.assignments[i] = static_cast<std::uint32_t>(best);
        e.summaries[best].add(dataset.record(i));
        policy.on_change(e, best);
    }

    // Step 3: sweep all objects in file order until a full sweep moves
    // nothing. An object moves only to a strictly better cluster (lowest
    // index among the strictly better ones); its score against its own
    // cluster still counts the object itself. A move that would empty its
    // source cluster is vetoed so exactly k clusters survive.
    ConvergenceStats stats;
    for (std::size_t sweep = 1; sweep <= cfg.max_iterations; ++sweep) {
        std::size_t swaps = 0;
        for (std::size_t i = 0; i < e.n; ++i) {
            const std::size_t cur = e.assignments[i];
            const Score cur_score = policy.score(e, cur, i);
            std::size_t best = cur;
            Score best_score = cur_score;
            for (std::size_t c = 0; c < k; ++c) {
                if (c == cur) continue;
                Score s = policy.score(e, c, i);
                if (policy.better(s, best_score)) {
                    best = c;
                    best_score = s;
                }
            }
            if (best == cur) continue;
            if (e.summaries[cur].member_count() == 1) continue;  // veto: keep k clusters

            if (!policy.better(best_score, cur_score)) {
                throw IntegrityError("reallocation without strict improvement");
            }
            if (cfg.trace) {
                *cfg.trace << "iter=" << sweep << " obj=" << i << " from=" << cur << " to=" << best
                           << " from_score=" << policy.format(cur_score)
                           << " to_score=" << policy.format(best_score) << "\n";
            }
            e.summaries[cur].remove(dataset.record(i));
            e.summaries[best].add(dataset.record(i));
            e.assignments[i] = static_cast<std::uint32_t>(best);
            policy.on_change(e, cur);
            policy.on_change(e, best);
            ++swaps;
        }
        stats.swaps_per_iteration.push_back(swaps);
        stats.cost_trace.push_back(e.sweep_cost());
        if (cfg.validate_each_sweep) e.validate_against_assignments();
        if (swaps == 0) {
            stats.converged = true;
            break;
        }
    }
    stats.iterations = stats.swaps_per_iteration.size();

    ClusterModel model;
    model.algorithm = tag;
    model.denominator = cfg.denominator;
    model.k = k;
    model.assignments = std::move(e.assignments);
    model.summaries = std::move(e.summaries);
    model.modes = std::move(e.modes);
    model.seed_indices = std::move(seeds);
    return {std::move(model), std::move(stats)};
}

}  // namespace

RunResult run_khistograms(const CategoricalDataset& dataset, std::size_t k, const RunConfig& config) {
    return run_loop(dataset, k, config, AlgorithmTag::khistograms(), HistogramPolicy{}, false);
}

RunResult run_kmodes(const CategoricalDataset& dataset, std::size_t k, const RunConfig& config) {
    return run_loop(dataset, k, config, AlgorithmTag::kmodes(), ModePolicy{}, true);
}

RunResult run_avft(const CategoricalDataset& dataset, std::size_t k, const Fraction& threshold,
                   const RunConfig& config) {
    if (threshold < Fraction(0) || threshold > Fraction(1)) {
        throw UsageError("AVFT threshold must lie in [0, 1], got " + threshold.str());
    }
    return run_loop(dataset, k, config, AlgorithmTag::avft(threshold),
                    AvftPolicy{threshold.numerator(), threshold.denominator()}, false);
}

RunResult run_clustering(const CategoricalDataset& dataset, std::size_t k, const AlgorithmTag& algorithm,
                         const RunConfig& config) {
    switch (algorithm.kind) {
        case AlgorithmKind::khistograms:
            return run_khistograms(dataset, k, config);
        case AlgorithmKind::kmodes:
            return run_kmodes(dataset, k, config);
        case AlgorithmKind::avft:
            return run_avft(dataset, k, algorithm.threshold, config);
    }
    throw UsageError("unknown algorithm kind");
}

Fraction cost(const ClusterModel& model, const CategoricalDataset& dataset) {
    Fraction total(0);
    for (std::size_t c = 0; c < model.k; ++c) {
        std::int64_t squares = 0;
        for (std::uint32_t f : model.summaries[c].raw_counts()) {
            squares += static_cast<std::int64_t>(f) * f;
        }
        std::int64_t den = model.denominator == DenominatorMode::cluster
                               ? model.summaries[c].member_count()
                               : static_cast<std::int64_t>(dataset.record_count());
        if (den == 0) continue;  // empty cluster contributes nothing
        total = total + Fraction(squares, den);
    }
    return total;
}

double cost_value(const ClusterModel& model, const CategoricalDataset& dataset) {
    double total = 0.0;
    for (std::size_t c = 0; c < model.k; ++c) {
        std::int64_t squares = 0;
        for (std::uint32_t f : model.summaries[c].raw_counts()) {
            squares += static_cast<std::int64_t>(f) * f;
        }
        std::int64_t den = model.denominator == DenominatorMode::cluster
                               ? model.summaries[c].member_count()
                               : static_cast<std::int64_t>(dataset.record_count());
        if (den == 0) continue;
        total += static_cast<double>(squares) / static_cast<double>(den);
    }
    return total;
}

}  // namespace khist
