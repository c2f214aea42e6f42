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

#include <initializer_list>
#include <string_view>

#include "asprev/semantics.hpp"
#include "asprev/syntax.hpp"

namespace asprev::test {

inline Program prog(std::string_view text) { return parse_program(text); }

inline LiteralSet lits(std::initializer_list<std::string_view> texts) {
    LiteralSet out;
    for (auto t : texts) {
        out.insert(make_literal(t));
    }
    return out;
}

inline AnswerSetResult sets(std::initializer_list<std::initializer_list<std::string_view>> family) {
    std::set<LiteralSet> out;
    for (auto member : family) {
        out.insert(lits(member));
    }
    return AnswerSetResult::some(out);
}

}  // namespace asprev::test
