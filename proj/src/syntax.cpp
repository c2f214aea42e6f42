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

#include "asprev/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace asprev {

bool valid_atom_name(std::string_view name) {
    if (name.empty() || name == "not") {
        return false;
    }
    if (name[0] < 'a' || name[0] > 'z') {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

Literal make_literal(std::string_view text) {
    bool negated = !text.empty() && text[0] == '-';
    if (negated) {
        text.remove_prefix(1);
    }
    if (!valid_atom_name(text)) {
        throw std::invalid_argument("invalid literal: '" + std::string(text) + "'");
    }
    return {Atom{std::string(text)}, negated};
}

std::string to_string(const Literal& lit) {
    return lit.negated ? "-" + lit.atom.name : lit.atom.name;
}

std::string to_string(const LiteralSet& lits) {
    std::string out = "{";
    for (const auto& l : lits) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += to_string(l);
    }
    return out + "}";
}

bool is_subset(const LiteralSet& sub, const LiteralSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool intersects(const LiteralSet& a, const LiteralSet& b) {
    const LiteralSet& small = a.size() <= b.size() ? a : b;
    const LiteralSet& large = a.size() <= b.size() ? b : a;
    return std::any_of(small.begin(), small.end(),
                       [&](const Literal& l) { return large.contains(l); });
}

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b) {
    LiteralSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

LiteralSet set_difference(const LiteralSet& a, const LiteralSet& b) {
    LiteralSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

std::strong_ordering Rule::operator<=>(const Rule& other) const {
    if (auto c = is_constraint() <=> other.is_constraint(); c != 0) {
        return c;
    }
    if (auto c = head <=> other.head; c != 0) {
        return c;
    }
    if (auto c = pos_body <=> other.pos_body; c != 0) {
        return c;
    }
    return naf_body <=> other.naf_body;
}

std::string to_string(const Rule& rule) {
    std::string body;
    for (const auto& l : rule.pos_body) {
        if (!body.empty()) {
            body += ", ";
        }
        body += to_string(l);
    }
    for (const auto& l : rule.naf_body) {
        if (!body.empty()) {
            body += ", ";
        }
        body += "not " + to_string(l);
    }
    if (rule.is_constraint()) {
        return ":- " + body + ".";
    }
    if (body.empty()) {
        return to_string(*rule.head) + ".";
    }
    return to_string(*rule.head) + " :- " + body + ".";
}

Rule fact(Literal head) { return Rule{std::move(head), {}, {}}; }

Rule constraint(LiteralSet pos_body, LiteralSet naf_body) {
    return Rule{std::nullopt, std::move(pos_body), std::move(naf_body)};
}

std::set<Rule> rule_set(const Program& p) {
    return {p.rules.begin(), p.rules.end()};
}

bool same_rules(const Program& a, const Program& b) {
    return rule_set(a) == rule_set(b);
}

bool contains_rules(const Program& sub, const Program& super) {
    auto sup = rule_set(super);
    return std::all_of(sub.rules.begin(), sub.rules.end(),
                       [&](const Rule& r) { return sup.contains(r); });
}

Program program_union(const Program& a, const Program& b) {
    Program out;
    std::set<Rule> seen;
    for (const auto& list : {a.rules, b.rules}) {
        for (const auto& r : list) {
            if (seen.insert(r).second) {
                out.rules.push_back(r);
            }
        }
    }
    return out;
}

Program canonical(const Program& p) {
    auto rules = rule_set(p);
    return Program{{rules.begin(), rules.end()}};
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Program parse() {
        Program out;
        skip();
        while (!at_end()) {
            out.rules.push_back(rule());
            skip();
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t      pos_  = 0;
    int              line_ = 1;
    int              col_  = 1;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (!at_end()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            }
            else if (peek() == '%') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            }
            else {
                break;
            }
        }
    }

    bool literal_ahead() const {
        if (at_end()) {
            return false;
        }
        char c = peek();
        return c == '-' || (c >= 'a' && c <= 'z');
    }

    bool try_consume(std::string_view token) {
        skip();
        if (text_.substr(pos_, token.size()) != token) {
            return false;
        }
        for (std::size_t i = 0; i < token.size(); ++i) {
            advance();
        }
        return true;
    }

    void expect(std::string_view token, const std::string& what) {
        if (!try_consume(token)) {
            fail("expected " + what);
        }
    }

    std::string identifier() {
        skip();
        if (at_end() || peek() < 'a' || peek() > 'z') {
            fail(at_end() ? "unexpected end of input, expected an atom"
                          : std::string("unexpected character '") + peek() + "', expected an atom");
        }
        std::string name;
        while (!at_end()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                advance();
            }
            else {
                break;
            }
        }
        return name;
    }

    Literal literal() {
        skip();
        bool negated = try_consume("-");
        auto name    = identifier();
        if (name == "not") {
            fail("'not' is a keyword and cannot be used as an atom");
        }
        return {Atom{std::move(name)}, negated};
    }

    // Fills pos/naf from a non-empty comma-separated extended body.
    void body(Rule& rule) {
        do {
            skip();
            std::size_t save_pos  = pos_;
            int         save_line = line_, save_col = col_;
            if (!at_end() && peek() >= 'a' && peek() <= 'z') {
                if (identifier() == "not") {
                    rule.naf_body.insert(literal());
                    continue;
                }
                pos_  = save_pos;
                line_ = save_line;
                col_  = save_col;
            }
            rule.pos_body.insert(literal());
        } while (try_consume(","));
    }

    Rule rule() {
        Rule out;
        if (try_consume(":-")) {
            out.head = std::nullopt;
            skip();
            if (!literal_ahead()) {
                fail("a constraint requires a non-empty body");
            }
            body(out);
            expect(".", "'.' at end of rule");
            return out;
        }
        out.head = literal();
        if (try_consume(".")) {
            return out;
        }
        expect(":-", "'.' or ':-' after rule head");
        skip();
        if (!literal_ahead()) {
            fail("rule body must contain at least one literal");
        }
        body(out);
        expect(".", "'.' at end of rule");
        return out;
    }
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

std::string render_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        if (!out.empty()) {
            out += "\n";
        }
        out += to_string(r);
    }
    return out;
}

std::set<Atom> atoms_of(const Program& p) {
    std::set<Atom> out;
    for (const auto& r : p.rules) {
        if (r.head) {
            out.insert(r.head->atom);
        }
        for (const auto& l : r.pos_body) {
            out.insert(l.atom);
        }
        for (const auto& l : r.naf_body) {
            out.insert(l.atom);
        }
    }
    return out;
}

}  // namespace asprev
