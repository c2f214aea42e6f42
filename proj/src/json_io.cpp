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

#include "asprev/json_io.hpp"

namespace asprev {

using nlohmann::json;

json json_of(const LiteralSet& lits) {
    json arr = json::array();
    for (const auto& l : lits) {
        arr.push_back(to_string(l));
    }
    return arr;
}

json json_of(const AnswerSetResult& result) {
    switch (result.kind) {
        case AnswerSetResult::Kind::inconsistent: return {{"kind", "inconsistent"}};
        case AnswerSetResult::Kind::none: return {{"kind", "no-answer-sets"}};
        case AnswerSetResult::Kind::sets: break;
    }
    json sets = json::array();
    for (const auto& s : result.sets) {
        sets.push_back(json_of(s));
    }
    return {{"kind", "sets"}, {"answer_sets", sets}};
}

json json_of(const ThreeValuedInterpretation& x) {
    return {{"plus", json_of(x.plus)}, {"minus", json_of(x.minus)}};
}

json json_of(const RevisionTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json entry     = json_of(step.interpretation);
        entry["program"] = render_program(step.program);
        steps.push_back(std::move(entry));
    }
    return {{"steps", steps}};
}

json json_of(const PostulateSummary& summary) {
    json counterexamples = json::array();
    for (const auto& report : summary.counterexamples) {
        json programs = json::array();
        for (const auto& p : report.inputs) {
            programs.push_back(render_program(p));
        }
        counterexamples.push_back(
            {{"programs", programs}, {"lhs", report.lhs}, {"rhs", report.rhs}});
    }
    return {{"postulate", summary.postulate},
            {"passes", summary.passes},
            {"failures", summary.failures},
            {"precondition_unmet", summary.precondition_unmet},
            {"counterexamples", counterexamples}};
}

}  // namespace asprev
