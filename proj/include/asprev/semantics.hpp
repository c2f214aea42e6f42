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

#include "asprev/syntax.hpp"

namespace asprev {

/// Result of closing a program under its rules. Weakly negated body
/// literals are treated as fresh atoms that are never derivable, so rules
/// with a residual naf body never fire.
struct ClosureResult {
    enum class Kind {
        consistent,    ///< closure is a consistent literal set
        inconsistent,  ///< a complementary pair was derived; the closure is the set of all literals
        violated,      ///< the closure satisfies the body of a constraint
    };

    Kind       kind = Kind::consistent;
    LiteralSet literals;  // populated only for Kind::consistent

    static ClosureResult consistent_set(LiteralSet lits) {
        return {Kind::consistent, std::move(lits)};
    }
    static ClosureResult the_inconsistent_closure() { return {Kind::inconsistent, {}}; }
    static ClosureResult constraint_violated() { return {Kind::violated, {}}; }

    bool is_consistent() const { return kind == Kind::consistent; }
    bool operator==(const ClosureResult&) const = default;
};

/// The answer sets of a program: a family of consistent literal sets, the
/// single inconsistent answer set (the set of all literals), or none.
struct AnswerSetResult {
    enum class Kind { sets, inconsistent, none };

    Kind                    kind = Kind::none;
    std::vector<LiteralSet> sets;  // canonical order; nonempty iff kind == sets

    static AnswerSetResult some(const std::set<LiteralSet>& family) {
        return {Kind::sets, {family.begin(), family.end()}};
    }
    static AnswerSetResult the_inconsistent_set() { return {Kind::inconsistent, {}}; }
    static AnswerSetResult no_answer_sets() { return {Kind::none, {}}; }

    bool is_sets() const { return kind == Kind::sets; }
    bool operator==(const AnswerSetResult&) const = default;
};

/// "{{a, b}, {a, c}}", "{}" when there are no answer sets, "{L}" for the
/// inconsistent answer set.
std::string to_string(const AnswerSetResult& result);

/// A here-and-there model of a program, with literals treated as atoms.
struct SEModel {
    LiteralSet here;
    LiteralSet there;
    auto       operator<=>(const SEModel&) const = default;
};

/// All literals occurring in the program, signs included.
LiteralSet literal_base(const Program& p);

/// Smallest literal set closed under the rules of p, with the naf-as-fresh-
/// atom convention. Deriving a complementary pair yields the inconsistent
/// closure; otherwise a constraint whose body the closure satisfies yields
/// the violation marker. The inconsistent closure takes precedence: once it
/// is reached the closure is logically closed regardless of constraints.
ClosureResult consequences(const Program& p);

/// {head(r) <- pos_body(r) | r in p, naf_body(r) disjoint from x}.
Program reduct(const Program& p, const LiteralSet& x);

/// Enumerates candidates over the consistent subsets of p's head literals
/// plus the inconsistent candidate; X qualifies iff the closure of the
/// reduct of p relative to X equals X, with constraints acting as filters.
/// Classical-negation contradictions yield the inconsistent answer set;
/// constraint violations yield no answer sets.
AnswerSetResult answer_sets(const Program& p);

/// True iff p has at least one consistent answer set; programs with no
/// answer sets count as inconsistent.
bool is_consistent(const Program& p);

/// Same answer sets.
bool equivalent(const Program& a, const Program& b);

std::vector<SEModel> se_models(const Program& p);
std::vector<SEModel> se_models(const Program& p, const LiteralSet& base);

/// SE-model equality over the joint literal base of the two programs.
bool strongly_equivalent(const Program& a, const Program& b);

}  // namespace asprev
