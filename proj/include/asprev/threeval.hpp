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
#include "asprev/syntax.hpp"

namespace asprev {

/// A pair (plus, minus) of disjoint literal sets: plus holds literals taken
/// to be true, minus holds default assumptions of falsity. plus must be
/// consistent; minus may contain complementary pairs. The distinguished
/// `lattice` value stands for the inconsistent answer set and carries empty
/// components.
struct ThreeValuedInterpretation {
    LiteralSet plus;
    LiteralSet minus;
    bool       lattice = false;

    static ThreeValuedInterpretation inconsistent_marker() { return {{}, {}, true}; }

    auto operator<=>(const ThreeValuedInterpretation&) const = default;
};

/// Validating constructor; throws std::invalid_argument when the
/// disjointness or consistency requirements are violated.
ThreeValuedInterpretation make_interpretation(LiteralSet plus, LiteralSet minus);

/// "({a, c} ; {b, d})"; the inconsistent marker renders as "(L ; {})".
std::string to_string(const ThreeValuedInterpretation& x);

/// Drops every rule whose naf body meets x.plus, then erases from the
/// remaining naf bodies the literals covered by x.minus. Rejects the
/// inconsistent marker.
Program min_reduct(const Program& p, const ThreeValuedInterpretation& x);

/// True iff the min-reduct D of p wrt x derives exactly x.plus both with
/// residual naf literals erased and with them treated as fresh atoms, no
/// constraint of D fires under x.plus, and no proper subset of x.minus
/// already suffices. Rejects the inconsistent marker.
bool is_three_valued_answer_set(const Program& p, const ThreeValuedInterpretation& x);

/// For each answer set X of p, the interpretations (X, M) with M a minimal
/// subset of the weakly negated literals of p outside X that derives X.
/// Yields the empty family when p has no answer sets and the single
/// inconsistent marker when p has the inconsistent answer set.
std::vector<ThreeValuedInterpretation> three_valued_answer_sets(const Program& p);

/// Facts for x.plus followed by one single-literal constraint per member of
/// x.minus. Rejects the inconsistent marker.
Program canonical_program(const ThreeValuedInterpretation& x);

}  // namespace asprev
