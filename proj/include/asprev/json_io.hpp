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

#include "json.hpp"

#include "asprev/postulates.hpp"
#include "asprev/revision.hpp"

namespace asprev {

nlohmann::json json_of(const LiteralSet& lits);

/// {"kind":"sets","answer_sets":[["a","b"],...]} |
/// {"kind":"no-answer-sets"} | {"kind":"inconsistent"}
nlohmann::json json_of(const AnswerSetResult& result);

/// {"plus":[...],"minus":[...]}; the inconsistent marker is never
/// serialized as an interpretation.
nlohmann::json json_of(const ThreeValuedInterpretation& x);

/// {"steps":[{"program":"...","plus":[...],"minus":[...]},...]} with the
/// highest-priority step first.
nlohmann::json json_of(const RevisionTrace& trace);

/// {"postulate":...,"passes":...,"failures":...,"precondition_unmet":...,
///  "counterexamples":[{"programs":[...],"lhs":...,"rhs":...}]}
nlohmann::json json_of(const PostulateSummary& summary);

}  // namespace asprev
