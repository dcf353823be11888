/*
   Copyright 2026 The etale-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ETALE_REPRODUCE_HPP
#define ETALE_REPRODUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etale/serialize.hpp"

namespace etale {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> notes;
};

struct ReproduceReport {
    std::vector<CriterionResult> results;
    std::vector<std::string> missing;  // fixture files that could not be read
    bool all_pass() const;
};

/// Fixture files the run reads, relative to the fixture directory.
const std::vector<std::string>& fixture_names();

int criterion_count();

/// Runs one criterion (1-based); the seed only moves sample points.
CriterionResult run_criterion(int id, const std::string& fixture_dir, std::uint64_t seed);

/// All criteria, or only `only` when given.
ReproduceReport reproduce_paper(const std::string& fixture_dir, std::uint64_t seed, std::optional<int> only = std::nullopt);

json to_json(const ReproduceReport& r);

}  // namespace etale

#endif  // ETALE_REPRODUCE_HPP
