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

#include <vector>

#include "asprev/semantics.hpp"
#include "asprev/threeval.hpp"

namespace asprev {

/// Remainders of a base program by an incoming one: either the marker for
/// an inconsistent incoming program, or the family of programs obtained by
/// joining each maximal consistent-with-incoming subset of the base to the
/// incoming program.
struct RemainderResult {
    bool                 lattice = false;
    std::vector<Program> programs;  // canonical order; nonempty iff !lattice

    static RemainderResult the_lattice() { return {true, {}}; }
};

/// One resolved step of a revision: the program in force at that level and
/// the interpretation it produced. A step's interpretation carries the
/// assumptions accumulated from all higher-priority steps.
struct TraceStep {
    Program                   program;
    ThreeValuedInterpretation interpretation;
};

/// Steps ordered from the highest-priority program down to the first.
struct RevisionTrace {
    std::vector<TraceStep> steps;
};

struct RevisionOutcome {
    AnswerSetResult            answer_sets;
    std::vector<RevisionTrace> traces;  // populated only for the sets outcome
};

/// Lattice marker when `incoming` is inconsistent; otherwise every
/// P' u incoming for subset-maximal P' of `base` keeping the union
/// consistent. The empty subset always qualifies, so the family is
/// nonempty.
RemainderResult remainders(const Program& base, const Program& incoming);

/// Revision of `base` by `incoming`; equal to
/// revise_sequence({base, incoming}).
RevisionOutcome revise_pair(const Program& base, const Program& incoming);

/// Revision of a sequence given lowest-priority first. The last program is
/// solved as-is; each earlier program contributes a maximal set of rules
/// consistent with everything resolved above it. Inconsistency of the
/// highest-priority program propagates: no answer sets stay no answer
/// sets, the inconsistent answer set stays inconsistent. Throws
/// std::invalid_argument on an empty sequence.
RevisionOutcome revise_sequence(const std::vector<Program>& programs);

/// Union of all step programs of a trace; equals the final step's program,
/// which contains all the others. Throws std::invalid_argument on an empty
/// trace.
Program merged_program(const RevisionTrace& trace);

}  // namespace asprev
