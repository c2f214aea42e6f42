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

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asprev {

/// A propositional atom. Names match [a-z][A-Za-z0-9_]*.
struct Atom {
    std::string name;
    auto operator<=>(const Atom&) const = default;
};

bool valid_atom_name(std::string_view name);

/// An atom or its classical negation. The positive literal of an atom
/// orders immediately before its negative literal.
struct Literal {
    Atom atom;
    bool negated = false;

    Literal complement() const { return {atom, !negated}; }
    auto    operator<=>(const Literal&) const = default;
};

/// Builds a literal from its textual form, "a" or "-a". Throws
/// std::invalid_argument on anything else.
Literal make_literal(std::string_view text);

std::string to_string(const Literal& lit);

using LiteralSet = std::set<Literal>;

/// Renders a literal set as "{a, -b, c}".
std::string to_string(const LiteralSet& lits);

bool is_subset(const LiteralSet& sub, const LiteralSet& super);
bool intersects(const LiteralSet& a, const LiteralSet& b);
LiteralSet set_union(const LiteralSet& a, const LiteralSet& b);
LiteralSet set_difference(const LiteralSet& a, const LiteralSet& b);

/// A rule `head :- pos_body, not naf_body.` An absent head encodes a
/// constraint.
struct Rule {
    std::optional<Literal> head;
    LiteralSet             pos_body;
    LiteralSet             naf_body;

    bool is_constraint() const { return !head.has_value(); }
    bool is_positive() const { return naf_body.empty(); }
    bool is_fact() const { return head.has_value() && pos_body.empty() && naf_body.empty(); }

    bool operator==(const Rule&) const = default;
    // Headed rules order before constraints; ties broken by head and bodies.
    std::strong_ordering operator<=>(const Rule& other) const;
};

std::string to_string(const Rule& rule);

Rule fact(Literal head);
Rule constraint(LiteralSet pos_body, LiteralSet naf_body = {});

/// A finite collection of rules. Textual order is preserved for printing;
/// every semantic operation treats the rules as a set, so duplicates have
/// no effect.
struct Program {
    std::vector<Rule> rules;

    bool empty() const { return rules.empty(); }
};

std::set<Rule> rule_set(const Program& p);
bool           same_rules(const Program& a, const Program& b);
bool           contains_rules(const Program& sub, const Program& super);

/// Rules of `a` in order, followed by the rules of `b` not already present.
Program program_union(const Program& a, const Program& b);

/// Duplicate-free copy with rules in their canonical order.
Program canonical(const Program& p);

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line, int column);
};

/// Parses the textual rule format:
///
///   program := (rule | comment)*        comment := "%" to end of line
///   rule    := head "." | head ":-" body "." | ":-" body "."
///   head    := literal
///   body    := ext ("," ext)*           ext     := "not" literal | literal
///   literal := "-"? atom                atom    := [a-z][A-Za-z0-9_]*
///
/// "not" is reserved and cannot be used as an atom name. A constraint with
/// an empty body is rejected. Throws ParseError with 1-based line/column.
Program parse_program(std::string_view text);

/// One rule per line, no trailing newline. parse_program(render_program(p))
/// yields the same rule set as p.
std::string render_program(const Program& p);

std::set<Atom> atoms_of(const Program& p);

}  // namespace asprev
