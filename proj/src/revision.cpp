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

#include "asprev/revision.hpp"

#include <algorithm>
#include <bit>

namespace asprev {

RemainderResult remainders(const Program& base, const Program& incoming) {
    if (!is_consistent(incoming)) {
        return RemainderResult::the_lattice();
    }
    std::vector<Rule> pool;
    std::set<Rule>    seen;
    for (const auto& r : base.rules) {
        if (seen.insert(r).second) {
            pool.push_back(r);
        }
    }

    // Subsets largest-first; a subset of an already accepted one cannot be
    // maximal.
    std::vector<std::set<Rule>> accepted;
    std::vector<Program>        members;
    const std::size_t           n = pool.size();
    std::vector<std::size_t>    masks(std::size_t{1} << n);
    for (std::size_t m = 0; m < masks.size(); ++m) {
        masks[m] = m;
    }
    std::stable_sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    for (std::size_t mask : masks) {
        std::set<Rule> subset;
        Program        kept;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                subset.insert(pool[i]);
                kept.rules.push_back(pool[i]);
            }
        }
        bool dominated = std::any_of(accepted.begin(), accepted.end(), [&](const auto& larger) {
            return std::includes(larger.begin(), larger.end(), subset.begin(), subset.end());
        });
        if (dominated) {
            continue;
        }
        Program candidate = program_union(kept, incoming);
        if (is_consistent(candidate)) {
            accepted.push_back(std::move(subset));
            members.push_back(std::move(candidate));
        }
    }
    std::sort(members.begin(), members.end(), [](const Program& a, const Program& b) {
        return rule_set(a) < rule_set(b);
    });
    return RemainderResult{false, std::move(members)};
}

RevisionOutcome revise_pair(const Program& base, const Program& incoming) {
    return revise_sequence({base, incoming});
}

RevisionOutcome revise_sequence(const std::vector<Program>& programs) {
    if (programs.empty()) {
        throw std::invalid_argument("revise_sequence requires at least one program");
    }
    auto top = three_valued_answer_sets(programs.back());
    if (top.empty()) {
        return {AnswerSetResult::no_answer_sets(), {}};
    }
    if (top.front().lattice) {
        return {AnswerSetResult::the_inconsistent_set(), {}};
    }

    std::vector<RevisionTrace> traces;
    for (auto& x : top) {
        traces.push_back(RevisionTrace{{TraceStep{programs.back(), std::move(x)}}});
    }
    for (std::size_t level = programs.size() - 1; level-- > 0;) {
        std::vector<RevisionTrace> extended;
        for (const auto& trace : traces) {
            const TraceStep& above = trace.steps.back();
            Program target = program_union(above.program, canonical_program(above.interpretation));
            RemainderResult rem = remainders(programs[level], target);
            if (rem.lattice) {
                // The target always has above.interpretation.plus as an
                // answer set: its facts are contained in it and its
                // constraints are blocked at every higher level.
                throw std::logic_error("remainder target unexpectedly inconsistent");
            }
            for (const auto& member : rem.programs) {
                for (const auto& y : three_valued_answer_sets(member)) {
                    RevisionTrace longer = trace;
                    longer.steps.push_back(TraceStep{
                        member, make_interpretation(
                                    y.plus, set_union(y.minus, above.interpretation.minus))});
                    extended.push_back(std::move(longer));
                }
            }
        }
        traces = std::move(extended);
    }

    std::set<LiteralSet> family;
    for (const auto& t : traces) {
        family.insert(t.steps.back().interpretation.plus);
    }
    return {AnswerSetResult::some(family), std::move(traces)};
}

Program merged_program(const RevisionTrace& trace) {
    if (trace.steps.empty()) {
        throw std::invalid_argument("merged_program requires a nonempty trace");
    }
    Program out;
    for (const auto& step : trace.steps) {
        out = program_union(out, step.program);
    }
    return out;
}

}  // namespace asprev
