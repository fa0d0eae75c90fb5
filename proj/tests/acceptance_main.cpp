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

// End-to-end acceptance suite. Each numbered criterion prints one
// [PASS]/[FAIL] line; the process exits nonzero if any fail.
//
// Criteria 3-8 run against the classic UCI files when they are present
// under <data-dir>/uci (see scripts/fetch_uci_data.sh) and fall back to the
// committed synthetic stand-ins otherwise, stating which data ran.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "khist/bench.hpp"
#include "khist/clustering.hpp"
#include "khist/dissimilarity.hpp"
#include "khist/metrics.hpp"
#include "khist/synthetic.hpp"
#include "testutil.hpp"

using namespace khist;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << " (" << name << "): " << detail
              << "\n";
    if (!pass) ++g_failures;
}

struct Expect {
    bool ok = true;
    std::string why;

    void require(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            why = message;
        }
    }
};

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("KHIST_DATA_DIR")) return env;
    return "data";
}

struct ResolvedPreset {
    SweepSpec spec;
    std::string source;  // "UCI" or "synthetic stand-in"
};

ResolvedPreset resolve_preset(const std::string& real_name, const std::string& synth_name) {
    const auto presets = data_dir() / "presets";
    SweepSpec real = load_preset(presets / (real_name + ".json"));
    if (std::filesystem::exists(real.dataset_path)) {
        return {std::move(real), "UCI"};
    }
    return {load_preset(presets / (synth_name + ".json")), "synthetic stand-in"};
}

// --------------------------------------------------------------------------
// 1. Compression soundness: the summary route equals the brute-force record
//    route exactly, and mismatch + match masses always split m.

void criterion_1() {
    test::SplitMix64 rng(101);
    Expect e;
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 2 + rng.below(49);   // <= 50
        const std::size_t m = 1 + rng.below(6);    // <= 6
        const std::size_t p = 1 + rng.below(5);    // <= 5
        CategoricalDataset ds = test::random_dataset(rng, n, m, p);

        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.next() & 1) members.push_back(i);
        }
        if (members.empty()) members.push_back(rng.below(n));

        ClusterSummary summary = build_histogram(ds, members);
        for (int probe_round = 0; probe_round < 4; ++probe_round) {
            auto probe = ds.record(rng.below(n));
            const Fraction via_summary = summary_mismatch(summary, probe);
            const Fraction via_records = avg_mismatch(ds, members, probe);
            const Fraction naive = test::naive_avg_mismatch(ds, members, probe);
            e.require(via_summary == via_records, "summary route diverged from record route");
            e.require(via_records == naive, "record route diverged from the naive oracle");
            e.require(via_summary + summary_match(summary, probe) == Fraction(static_cast<std::int64_t>(m)),
                      "mismatch + match != m");
        }
    }
    report(1, "compression soundness", e.ok, e.ok ? "200 random datasets, exact equality" : e.why);
}

// --------------------------------------------------------------------------
// 2. Brute-force clustering oracle on tiny instances: the final cost sits
//    inside the exhaustive partition range and every reallocation improves.

void criterion_2() {
    test::SplitMix64 rng(202);
    Expect e;
    int tested = 0;
    for (int round = 0; tested < 60 && round < 400; ++round) {
        const std::size_t n = 4 + rng.below(7);   // 4..10
        const std::size_t m = 2 + rng.below(3);   // 2..4
        const std::size_t k = 2 + rng.below(2);   // 2..3
        CategoricalDataset ds = test::random_dataset(rng, n, m, 2 + rng.below(2));

        RunConfig cfg;
        cfg.validate_each_sweep = true;  // summaries re-checked after every sweep
        std::ostringstream trace;
        cfg.trace = &trace;              // per-move improvement asserted inside the loop

        RunResult r;
        try {
            r = run_khistograms(ds, k, cfg);
        } catch (const DataError&) {
            continue;  // fewer than k distinct records; draw another instance
        }
        ++tested;

        Fraction lo, hi;
        bool first = true;
        test::for_each_full_partition(n, k, [&](const std::vector<std::uint32_t>& assign) {
            const Fraction c = test::partition_cost_oracle(ds, assign, k);
            if (first || c < lo) lo = c;
            if (first || c > hi) hi = c;
            first = false;
        });
        const Fraction actual = cost(r.model, ds);
        e.require(lo <= actual && actual <= hi, "final cost outside the exhaustive range");
        e.require(actual == test::partition_cost_oracle(ds, r.model.assignments, k),
                  "cost disagrees with the definition-level oracle");
        e.require(r.stats.converged, "tiny instance failed to converge");
    }
    e.require(tested == 60, "could not assemble 60 seedable instances");
    report(2, "exhaustive clustering oracle", e.ok,
           e.ok ? "60 instances, cost within [min, max], per-move improvement held" : e.why);
}

// --------------------------------------------------------------------------
// 3. Voting reproduction (directional).

void check_shape(Expect& e, const SweepSpec& spec, std::size_t n, std::size_t m,
                 std::vector<std::size_t> class_sizes) {
    CategoricalDataset ds = load_csv_file(spec.dataset_path, spec.load);
    e.require(ds.record_count() == n, spec.name + ": expected n=" + std::to_string(n));
    e.require(ds.attribute_count() == m, spec.name + ": expected m=" + std::to_string(m));
    std::vector<std::size_t> sizes = ds.label_class_sizes();
    std::sort(sizes.begin(), sizes.end());
    std::sort(class_sizes.begin(), class_sizes.end());
    e.require(sizes == class_sizes, spec.name + ": class sizes are off");
}

void criterion_3() {
    Expect e;
    std::string detail;
    try {
        ResolvedPreset preset = resolve_preset("voting", "voting-synth");
        check_shape(e, preset.spec, 435, 16, {168, 267});
        SweepResult result = run_sweep(preset.spec);

        Fraction khist_total(0), kmodes_total(0);
        std::size_t wins_or_ties = 0, cells = 0;
        for (const auto& entry : result.ranking->entries) {
            khist_total = khist_total + entry.error_a;
            kmodes_total = kmodes_total + entry.error_b;
            if (entry.error_a <= entry.error_b) ++wins_or_ties;
            ++cells;
        }
        e.require(cells == 8, "expected 8 compared k values");
        e.require(khist_total <= kmodes_total, "k-histograms mean error above k-modes");
        e.require(wins_or_ties >= 4, "k-histograms won or tied fewer than 4 of 8");

        std::ostringstream d;
        d << preset.source << ", wins-or-ties " << wins_or_ties << "/8, mean error "
          << khist_total.to_double() / 8 << " vs " << kmodes_total.to_double() / 8;
        detail = d.str();
    } catch (const std::exception& ex) {
        e.require(false, ex.what());
    }
    report(3, "voting reproduction", e.ok, e.ok ? detail : e.why);
}

// --------------------------------------------------------------------------
// 4. Mushroom reproduction (directional): error majority and fewer swaps.

ResolvedPreset mushroom_preset() { return resolve_preset("mushroom", "mushroom-synth"); }

void criterion_4(const SweepResult& result, const std::string& source, const SweepSpec& spec) {
    Expect e;
    check_shape(e, spec, 8124, 22, {4208, 3916});
    std::size_t strict_wins = 0, cells = 0;
    std::size_t khist_swaps = 0, kmodes_swaps = 0;
    for (const auto& entry : result.ranking->entries) {
        if (entry.error_a < entry.error_b) ++strict_wins;
        ++cells;
    }
    for (const RunReport& r : result.reports) {
        if (r.algorithm == "khist") khist_swaps += r.total_swaps;
        if (r.algorithm == "kmodes") kmodes_swaps += r.total_swaps;
    }
    e.require(cells == 26, "expected 26 compared k values");
    e.require(strict_wins * 2 > cells, "no strict majority of error wins");
    e.require(khist_swaps < kmodes_swaps, "k-histograms did not swap fewer objects");

    std::ostringstream d;
    d << source << ", strict wins " << strict_wins << "/26, swaps " << khist_swaps << " vs " << kmodes_swaps;
    report(4, "mushroom reproduction", e.ok, e.ok ? d.str() : e.why);
}

// --------------------------------------------------------------------------
// 5. Pure-cluster dominance on the mushroom sweep.

void criterion_5(const SweepResult& result, const std::string& source) {
    Expect e;
    std::size_t dominated = 0, cells = 0;
    for (std::size_t i = 0; i < result.reports.size() / 2; ++i) {
        const RunReport& khist = result.reports[i];
        const RunReport& kmodes = result.reports[result.reports.size() / 2 + i];
        if (khist.pure_cluster_count >= kmodes.pure_cluster_count) ++dominated;
        ++cells;
    }
    e.require(cells == 26, "expected 26 cells");
    e.require(dominated * 5 >= cells * 4, "pure-cluster dominance below 80% of k values");

    std::ostringstream d;
    d << source << ", k-histograms >= k-modes in " << dominated << "/26 k values";
    report(5, "pure-cluster dominance", e.ok, e.ok ? d.str() : e.why);
}

// --------------------------------------------------------------------------
// 6. AVFT endpoint identity: threshold 0 writes byte-identical assignments.

std::string assignments_text(const ClusterModel& model) {
    std::ostringstream out;
    out << "record,cluster\n";
    for (std::size_t i = 0; i < model.assignments.size(); ++i) out << i << ',' << model.assignments[i] << '\n';
    return out.str();
}

void criterion_6() {
    Expect e;
    std::string sources;
    try {
        for (const auto& [real, synth] : {std::pair<std::string, std::string>{"voting", "voting-synth"},
                                          std::pair<std::string, std::string>{"mushroom", "mushroom-synth"}}) {
            ResolvedPreset preset = resolve_preset(real, synth);
            CategoricalDataset ds = load_csv_file(preset.spec.dataset_path, preset.spec.load);
            for (std::size_t k : preset.spec.k_range.values()) {
                RunResult h = run_khistograms(ds, k, preset.spec.run);
                RunResult a = run_avft(ds, k, Fraction(0), preset.spec.run);
                e.require(assignments_text(h.model) == assignments_text(a.model),
                          "assignment files differ at k=" + std::to_string(k) + " on " + preset.spec.name);
            }
            sources += (sources.empty() ? "" : ", ") + preset.spec.name + " (" + preset.source + ")";
        }
    } catch (const std::exception& ex) {
        e.require(false, ex.what());
    }
    report(6, "AVFT endpoint identity", e.ok, e.ok ? "byte-identical assignments on " + sources : e.why);
}

// --------------------------------------------------------------------------
// 7. Determinism: rerunning each preset sweep reproduces every CSV byte.

void criterion_7() {
    Expect e;
    std::string detail;
    try {
        std::size_t files = 0;
        for (const auto& [real, synth] : {std::pair<std::string, std::string>{"voting", "voting-synth"},
                                          std::pair<std::string, std::string>{"mushroom", "mushroom-synth"}}) {
            ResolvedPreset preset = resolve_preset(real, synth);
            test::TempDir dir;
            const auto out_a = dir.path() / "a";
            const auto out_b = dir.path() / "b";
            write_sweep_outputs(run_sweep(preset.spec), out_a);
            write_sweep_outputs(run_sweep(preset.spec), out_b);
            for (const auto& entry : std::filesystem::directory_iterator(out_a)) {
                if (entry.path().extension() != ".csv") continue;
                ++files;
                const auto other = out_b / entry.path().filename();
                e.require(std::filesystem::exists(other), "missing " + other.string());
                if (std::filesystem::exists(other)) {
                    e.require(test::read_file(entry.path()) == test::read_file(other),
                              entry.path().filename().string() + " differs between runs");
                }
            }
        }
        detail = "both presets, " + std::to_string(files) + " CSV files byte-identical";
    } catch (const std::exception& ex) {
        e.require(false, ex.what());
    }
    report(7, "sweep determinism", e.ok, e.ok ? detail : e.why);
}

// --------------------------------------------------------------------------
// 8. Termination: every preset cell converges well under the iteration cap.

void criterion_8() {
    Expect e;
    std::string detail;
    try {
        std::size_t cells = 0, max_iterations = 0;
        for (const auto& [real, synth] : {std::pair<std::string, std::string>{"voting", "voting-synth"},
                                          std::pair<std::string, std::string>{"mushroom", "mushroom-synth"}}) {
            ResolvedPreset preset = resolve_preset(real, synth);
            SweepResult result = run_sweep(preset.spec);
            for (const RunReport& r : result.reports) {
                ++cells;
                max_iterations = std::max(max_iterations, r.iterations);
                e.require(r.converged, preset.spec.name + " " + r.algorithm + " k=" + std::to_string(r.k) +
                                           " did not converge");
            }
        }
        std::ostringstream d;
        d << cells << " cells converged, max sweeps " << max_iterations << " (cap 100)";
        detail = d.str();
    } catch (const std::exception& ex) {
        e.require(false, ex.what());
    }
    report(8, "termination and convergence", e.ok, e.ok ? detail : e.why);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();

    try {
        ResolvedPreset preset = mushroom_preset();
        SweepResult mushroom = run_sweep(preset.spec);
        criterion_4(mushroom, preset.source, preset.spec);
        criterion_5(mushroom, preset.source);
    } catch (const std::exception& ex) {
        report(4, "mushroom reproduction", false, ex.what());
        report(5, "pure-cluster dominance", false, ex.what());
    }

    criterion_6();
    criterion_7();
    criterion_8();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
