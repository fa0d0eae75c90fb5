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
#include <span>
#include <string>
#include <vector>

#include "khist/dataset.hpp"

namespace khist::synth {

/// Deterministic 64-bit generator (splitmix64). Used instead of std
/// distributions so generated fixtures are identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    std::uint64_t state_;
};

struct Row {
    std::string label;
    std::vector<std::string> fields;
};

// Offline stand-ins for the two classic categorical benchmark files. They
// reproduce the documented shape of the originals exactly: record count,
// attribute count, class sizes, value alphabets, missing "?" tokens, over
// synthetic class-conditional distributions, so the whole pipeline can run
// without downloading anything. They are NOT the original measurements;
// use scripts/fetch_uci_data.sh for those.

inline constexpr std::uint64_t kVotesSeed = 435;
inline constexpr std::uint64_t kMushroomSeed = 777;

/// 435 records, 16 yes/no/? attributes, classes democrat (267) and
/// republican (168), label in the first column. Most attributes are
/// party-aligned to varying degrees; a small fraction of records vote
/// against their party line throughout (outliers).
std::vector<Row> votes_like_rows(std::uint64_t seed = kVotesSeed);

/// 8124 records, 22 letter-coded attributes with the classic alphabet
/// sizes (including one constant attribute and one attribute with ~30%
/// "?" entries), classes e (4208) and p (3916), label first.
std::vector<Row> mushroom_like_rows(std::uint64_t seed = kMushroomSeed);

/// Writes rows as comma-separated lines, label first, no header.
void write_rows_csv(std::ostream& out, std::span<const Row> rows);

/// Interns rows directly (label first), bypassing the text round trip.
CategoricalDataset make_dataset(std::span<const Row> rows);

}  // namespace khist::synth
