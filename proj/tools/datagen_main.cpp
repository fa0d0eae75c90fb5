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

// khist-datagen regenerates the synthetic stand-in datasets shipped under
// data/synthetic/. Output is identical for identical seeds on any platform.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "khist/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"deterministic synthetic stand-ins for the classic categorical benchmarks"};
    std::string dataset;
    std::string out;
    std::uint64_t seed = 0;
    app.add_option("--dataset", dataset, "votes|mushroom")->required();
    app.add_option("--out", out, "Output CSV path")->required();
    app.add_option("--seed", seed, "Override the default seed");

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<khist::synth::Row> rows;
        if (dataset == "votes") {
            rows = khist::synth::votes_like_rows(seed != 0 ? seed : khist::synth::kVotesSeed);
        } else if (dataset == "mushroom") {
            rows = khist::synth::mushroom_like_rows(seed != 0 ? seed : khist::synth::kMushroomSeed);
        } else {
            std::cerr << "usage error: unknown dataset '" << dataset << "'\n";
            return 1;
        }

        const std::filesystem::path path(out);
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            std::cerr << "data error: cannot write " << out << "\n";
            return 2;
        }
        khist::synth::write_rows_csv(file, rows);
        std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
}
