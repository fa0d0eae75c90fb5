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
#include <doctest.h>

#include <vector>

#include "khist/dissimilarity.hpp"
#include "testutil.hpp"

using namespace khist;

namespace {

CategoricalDataset three_records() {
    return test::dataset_from_rows({{"a", "x"}, {"a", "y"}, {"b", "x"}});
}

}  // namespace

TEST_CASE("simple matching counts mismatching positions") {
    CategoricalDataset ds = three_records();
    CHECK(simple_matching(ds.record(0), ds.record(0)) == 0);
    CHECK(simple_matching(ds.record(0), ds.record(1)) == 1);  // (a,x) vs (a,y)
    CHECK(simple_matching(ds.record(1), ds.record(2)) == 2);  // differs everywhere

    std::vector<ValueCode> shorter{0};
    CHECK_THROWS_AS(simple_matching(ds.record(0), shorter), UsageError);
}

TEST_CASE("simple matching is a metric") {
    test::SplitMix64 rng(3001);
    for (int round = 0; round < 200; ++round) {
        CategoricalDataset ds = test::random_dataset(rng, 3, 1 + rng.below(6), 1 + rng.below(4));
        auto x = ds.record(0);
        auto y = ds.record(1);
        auto z = ds.record(2);
        CHECK(simple_matching(x, x) == 0);
        CHECK(simple_matching(x, y) == simple_matching(y, x));
        CHECK(simple_matching(x, z) <= simple_matching(x, y) + simple_matching(y, z));
    }
}

TEST_CASE("average mismatch over a member set") {
    CategoricalDataset ds = three_records();
    std::vector<std::size_t> all{0, 1, 2};
    // d1 sums: (a,x) vs members = 0 + 1 + 1.
    CHECK(avg_mismatch(ds, all, ds.record(0)) == Fraction(2, 3));

    std::vector<std::size_t> self{1};
    CHECK(avg_mismatch(ds, self, ds.record(1)) == Fraction(0));

    CategoricalDataset pair = test::dataset_from_rows({{"a", "x"}, {"b", "y"}});
    std::vector<std::size_t> one{0};
    CHECK(avg_mismatch(pair, one, pair.record(1)) == Fraction(2));  // everything differs -> m

    CHECK_THROWS_AS(avg_mismatch(ds, {}, ds.record(0)), UsageError);
}

TEST_CASE("summary mismatch equals the member-set average") {
    CategoricalDataset ds = three_records();
    std::vector<std::size_t> all{0, 1, 2};
    ClusterSummary summary = build_histogram(ds, all);
    CHECK(summary_mismatch(summary, ds.record(0)) == Fraction(2, 3));

    // n copies of the probe: zero mismatch.
    CategoricalDataset copies = test::dataset_from_rows({{"a", "x"}, {"a", "x"}, {"a", "x"}});
    std::vector<std::size_t> members{0, 1, 2};
    CHECK(summary_mismatch(build_histogram(copies, members), copies.record(0)) == Fraction(0));

    ClusterSummary empty(ds.schema_ptr());
    CHECK_THROWS_AS(summary_mismatch(empty, ds.record(0)), UsageError);
}

TEST_CASE("summary match weighs matched frequencies") {
    CategoricalDataset ds = three_records();
    ClusterSummary summary = build_histogram(ds, std::vector<std::size_t>{0, 1, 2});
    // Matches for (a,x): f(a)=2, f(x)=2.
    CHECK(summary_match(summary, ds.record(0)) == Fraction(4, 3));

    CategoricalDataset copies = test::dataset_from_rows({{"a", "x"}, {"a", "x"}});
    ClusterSummary full = build_histogram(copies, std::vector<std::size_t>{0, 1});
    CHECK(summary_match(full, copies.record(0)) == Fraction(2));  // all match -> m

    // A probe sharing no values with the summary scores zero.
    CategoricalDataset mixed = test::dataset_from_rows({{"a", "x"}, {"b", "y"}});
    ClusterSummary only_first = build_histogram(mixed, std::vector<std::size_t>{0});
    CHECK(summary_match(only_first, mixed.record(1)) == Fraction(0));
    CHECK(summary_mismatch(only_first, mixed.record(1)) == Fraction(2));  // -> m
}

TEST_CASE("compression soundness and conservation on random instances") {
    test::SplitMix64 rng(3002);
    for (int round = 0; round < 120; ++round) {
        const std::size_t n = 2 + rng.below(30);
        const std::size_t m = 1 + rng.below(5);
        CategoricalDataset ds = test::random_dataset(rng, n, m, 1 + rng.below(4));

        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.next() & 1) members.push_back(i);
        }
        if (members.empty()) members.push_back(rng.below(n));

        ClusterSummary summary = build_histogram(ds, members);
        auto probe = ds.record(rng.below(n));

        // The histogram route reproduces the record-set route exactly.
        CHECK(summary_mismatch(summary, probe) == test::naive_avg_mismatch(ds, members, probe));
        CHECK(summary_mismatch(summary, probe) == avg_mismatch(ds, members, probe));

        // Mismatch and match masses split m exactly.
        CHECK(summary_mismatch(summary, probe) + summary_match(summary, probe) ==
              Fraction(static_cast<std::int64_t>(m)));

        // The reduced per-attribute forms equal the full sums over all values.
        std::int64_t mismatch_mass = 0;
        std::int64_t match_mass = 0;
        for (std::size_t j = 0; j < m; ++j) {
            mismatch_mass += test::mismatch_mass_full_sum(summary, j, probe[j]);
            match_mass += test::match_mass_full_sum(summary, j, probe[j]);
        }
        CHECK(summary_mismatch(summary, probe) ==
              Fraction(mismatch_mass, summary.member_count()));
        CHECK(summary_match(summary, probe) == Fraction(match_mass, summary.member_count()));
    }
}

TEST_CASE("avft at threshold zero reproduces the match score") {
    test::SplitMix64 rng(3003);
    for (int round = 0; round < 60; ++round) {
        CategoricalDataset ds = test::random_dataset(rng, 2 + rng.below(20), 1 + rng.below(4), 1 + rng.below(4));
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < ds.record_count(); ++i) {
            if (rng.next() & 1) members.push_back(i);
        }
        if (members.empty()) members.push_back(0);
        ClusterSummary summary = build_histogram(ds, members);
        auto probe = ds.record(rng.below(ds.record_count()));
        CHECK(avft_score(summary, probe, Fraction(0)) == summary_match(summary, probe));
    }
}

TEST_CASE("avft prunes values below the relative-frequency threshold") {
    CategoricalDataset ds = test::dataset_from_rows({{"a"}, {"a"}, {"b"}});
    ClusterSummary summary = build_histogram(ds, std::vector<std::size_t>{0, 1, 2});
    // b has relative frequency 1/3 < 0.5 and is pruned.
    CHECK(avft_score(summary, ds.record(2), Fraction(1, 2)) == Fraction(0));
    // a survives: 2/3 >= 0.5.
    CHECK(avft_score(summary, ds.record(0), Fraction(1, 2)) == Fraction(2, 3));
    // Boundary is inclusive: threshold exactly 1/3 keeps b.
    CHECK(avft_score(summary, ds.record(2), Fraction(1, 3)) == Fraction(1, 3));
}

TEST_CASE("avft at threshold one scores through the top value only") {
    test::SplitMix64 rng(3004);
    for (int round = 0; round < 60; ++round) {
        CategoricalDataset ds = test::random_dataset(rng, 3 + rng.below(15), 1 + rng.below(4), 2 + rng.below(3));
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < ds.record_count(); ++i) {
            if (rng.next() & 1) members.push_back(i);
        }
        if (members.empty()) members.push_back(0);
        ClusterSummary summary = build_histogram(ds, members);
        std::vector<ValueCode> mode = summary.mode();

        auto probe = ds.record(rng.below(ds.record_count()));
        std::int64_t expected = 0;
        for (std::size_t j = 0; j < probe.size(); ++j) {
            if (probe[j] == mode[j]) expected += summary.frequency(j, probe[j]);
        }
        CHECK(avft_score(summary, probe, Fraction(1)) ==
              Fraction(expected, summary.member_count()));
    }
}

TEST_CASE("avft is non-increasing in the threshold") {
    test::SplitMix64 rng(3005);
    const Fraction thresholds[] = {Fraction(0),      Fraction(1, 10), Fraction(1, 4), Fraction(1, 3),
                                   Fraction(1, 2),   Fraction(2, 3),  Fraction(3, 4), Fraction(9, 10),
                                   Fraction(1)};
    for (int round = 0; round < 60; ++round) {
        CategoricalDataset ds = test::random_dataset(rng, 2 + rng.below(20), 1 + rng.below(4), 1 + rng.below(5));
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < ds.record_count(); ++i) {
            if (rng.next() & 1) members.push_back(i);
        }
        if (members.empty()) members.push_back(0);
        ClusterSummary summary = build_histogram(ds, members);
        auto probe = ds.record(rng.below(ds.record_count()));

        Fraction previous = avft_score(summary, probe, thresholds[0]);
        for (const Fraction& t : thresholds) {
            Fraction score = avft_score(summary, probe, t);
            CHECK(score <= previous);
            previous = score;
        }
    }
}

TEST_CASE("avft threshold must be a probability") {
    CategoricalDataset ds = three_records();
    ClusterSummary summary = build_histogram(ds, std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(avft_score(summary, ds.record(0), Fraction(3, 2)), UsageError);
    CHECK_THROWS_AS(avft_score(summary, ds.record(0), Fraction(-1, 2)), UsageError);
}

TEST_CASE("argmin of mismatch is argmax of match over equal-sized summaries") {
    test::SplitMix64 rng(3006);
    for (int round = 0; round < 40; ++round) {
        const std::size_t m = 1 + rng.below(4);
        CategoricalDataset ds = test::random_dataset(rng, 24, m, 1 + rng.below(4));

        // Three disjoint summaries of equal size.
        std::vector<ClusterSummary> summaries;
        for (std::size_t c = 0; c < 3; ++c) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < 8; ++i) members.push_back(c * 8 + i);
            summaries.push_back(build_histogram(ds, members));
        }

        auto probe = ds.record(rng.below(ds.record_count()));
        std::size_t argmin = 0, argmax = 0;
        for (std::size_t c = 1; c < 3; ++c) {
            if (summary_mismatch(summaries[c], probe) < summary_mismatch(summaries[argmin], probe)) argmin = c;
            if (summary_match(summaries[c], probe) > summary_match(summaries[argmax], probe)) argmax = c;
        }
        CHECK(argmin == argmax);
    }
}
