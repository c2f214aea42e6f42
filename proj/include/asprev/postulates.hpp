// Copyright 2026 The asprev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asprev/revision.hpp"

namespace asprev {

/// Outcome of evaluating one postulate instance. `lhs`/`rhs` describe the
/// two compared answer-set families. A report with holds == false always
/// carries a witness and can be replayed through check_postulate.
struct PostulateReport {
    std::string                postulate;
    std::vector<Program>       inputs;
    bool                       holds            = true;
    bool                       precondition_met = true;
    std::string                lhs;
    std::string                rhs;
    std::optional<std::string> witness;
};

/// Deterministic program generator configuration; identical configurations
/// produce identical programs.
struct GeneratorConfig {
    std::uint64_t seed                    = 0;
    int           max_atoms               = 5;
    int           max_rules               = 6;
    int           max_body                = 3;
    double        prob_classical_negation = 0.3;
    double        prob_naf                = 0.5;
    double        prob_constraint         = 0.15;
};

struct PostulateSummary {
    std::string                  postulate;
    int                          passes             = 0;
    int                          failures           = 0;
    int                          precondition_unmet = 0;
    std::vector<PostulateReport> counterexamples;
};

/// Postulate names accepted by check_postulate, with the number of input
/// programs each expects.
const std::vector<std::pair<std::string, int>>& known_postulates();

/// Evaluates one postulate on concrete programs. For A6 and SAbsorption the
/// strong-equivalence precondition is verified first; absorption and
/// augmentation verify their answer-set preconditions and disjointness,
/// parallelism and non-interference their alphabet preconditions. Throws
/// std::invalid_argument for an unknown name or an arity mismatch.
PostulateReport check_postulate(const std::string& name, const std::vector<Program>& programs);

/// Deterministic random program over atoms a1..a<max_atoms>. Constraints
/// always receive a nonempty body. Throws std::invalid_argument when
/// max_atoms < 1.
Program random_program(const GeneratorConfig& cfg);

/// The input tuple the fuzzer feeds to `name` at the given iteration.
/// Preconditions are established constructively: strongly equivalent pairs
/// for A6/SAbsorption, disjoint alphabets (with consistent revisers for
/// non-interference), tautological second programs for tautology, and
/// answer-set-related pairs for absorption/augmentation.
std::vector<Program> postulate_inputs(const std::string& name, const GeneratorConfig& cfg,
                                      int iteration);

/// Runs `iterations` generated instances of each listed postulate and
/// aggregates the verdicts, retaining every counterexample. Failing
/// instances never abort the run.
std::vector<PostulateSummary> fuzz_postulates(const GeneratorConfig& cfg, int iterations,
                                              const std::vector<std::string>& postulate_set);

}  // namespace asprev
