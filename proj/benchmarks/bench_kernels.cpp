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

// Microbenchmarks for the hot paths: the distance kernels, incremental
// summary maintenance, and full clustering runs on the mushroom-sized
// stand-in. Run with --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include <sstream>

#include "khist/clustering.hpp"
#include "khist/dissimilarity.hpp"
#include "khist/synthetic.hpp"

namespace {

using namespace khist;

const CategoricalDataset& mushroom() {
    static const CategoricalDataset dataset = [] {
        auto rows = synth::mushroom_like_rows();
        return synth::make_dataset(rows);
    }();
    return dataset;
}

void BM_simple_matching(benchmark::State& state) {
    const CategoricalDataset& ds = mushroom();
    std::size_t i = 0;
    for (auto _ : state) {
        auto a = ds.record(i % ds.record_count());
        auto b = ds.record((i * 7 + 13) % ds.record_count());
        benchmark::DoNotOptimize(simple_matching(a, b));
        ++i;
    }
}
BENCHMARK(BM_simple_matching);

void BM_summary_match(benchmark::State& state) {
    const CategoricalDataset& ds = mushroom();
    std::vector<std::size_t> members(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
    const ClusterSummary summary = build_histogram(ds, members);

    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(match_numerator(summary, ds.record(i % ds.record_count())));
        ++i;
    }
}
BENCHMARK(BM_summary_match)->Arg(64)->Arg(1024)->Arg(8124);

void BM_avft_score(benchmark::State& state) {
    const CategoricalDataset& ds = mushroom();
    std::vector<std::size_t> members(1024);
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
    const ClusterSummary summary = build_histogram(ds, members);
    const Fraction threshold(1, 4);

    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(avft_numerator(summary, ds.record(i % ds.record_count()), threshold));
        ++i;
    }
}
BENCHMARK(BM_avft_score);

void BM_summary_add_remove(benchmark::State& state) {
    const CategoricalDataset& ds = mushroom();
    ClusterSummary summary(ds.schema_ptr());
    summary.add(ds.record(0));  // keep it non-empty

    std::size_t i = 1;
    for (auto _ : state) {
        auto rec = ds.record(i % ds.record_count());
        summary.add(rec);
        summary.remove(rec);
        ++i;
    }
}
BENCHMARK(BM_summary_add_remove);

void BM_run_khistograms(benchmark::State& state) {
    const CategoricalDataset& ds = mushroom();
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        RunResult result = run_khistograms(ds, k);
        benchmark::DoNotOptimize(result.stats.iterations);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(ds.record_count()));
}
BENCHMARK(BM_run_khistograms)->Arg(4)->Arg(16)->Arg(27)->Unit(benchmark::kMillisecond);

void BM_run_kmodes(benchmark::State& state) {
    const CategoricalDataset& ds = mushroom();
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        RunResult result = run_kmodes(ds, k);
        benchmark::DoNotOptimize(result.stats.iterations);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(ds.record_count()));
}
BENCHMARK(BM_run_kmodes)->Arg(4)->Arg(16)->Arg(27)->Unit(benchmark::kMillisecond);

void BM_load_csv(benchmark::State& state) {
    auto rows = synth::mushroom_like_rows();
    std::ostringstream buffer;
    synth::write_rows_csv(buffer, rows);
    const std::string text = buffer.str();

    LoadOptions opt;
    opt.label_column = LabelColumn::first();
    for (auto _ : state) {
        std::istringstream in(text);
        CategoricalDataset ds = load_csv(in, opt);
        benchmark::DoNotOptimize(ds.record_count());
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_load_csv)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
