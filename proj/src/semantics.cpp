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

#include "asprev/semantics.hpp"

#include <algorithm>
#include <functional>

namespace asprev {

std::string to_string(const AnswerSetResult& result) {
    switch (result.kind) {
        case AnswerSetResult::Kind::inconsistent: return "{L}";
        case AnswerSetResult::Kind::none: return "{}";
        case AnswerSetResult::Kind::sets: break;
    }
    std::string out = "{";
    for (const auto& s : result.sets) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += to_string(s);
    }
    return out + "}";
}

LiteralSet literal_base(const Program& p) {
    LiteralSet out;
    for (const auto& r : p.rules) {
        if (r.head) {
            out.insert(*r.head);
        }
        out.insert(r.pos_body.begin(), r.pos_body.end());
        out.insert(r.naf_body.begin(), r.naf_body.end());
    }
    return out;
}

ClosureResult consequences(const Program& p) {
    LiteralSet derived;
    bool       changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules) {
            if (r.is_constraint() || !r.naf_body.empty() || derived.contains(*r.head)) {
                continue;
            }
            if (!is_subset(r.pos_body, derived)) {
                continue;
            }
            if (derived.contains(r.head->complement())) {
                return ClosureResult::the_inconsistent_closure();
            }
            derived.insert(*r.head);
            changed = true;
        }
    }
    for (const auto& r : p.rules) {
        if (r.is_constraint() && r.naf_body.empty() && is_subset(r.pos_body, derived)) {
            return ClosureResult::constraint_violated();
        }
    }
    return ClosureResult::consistent_set(std::move(derived));
}

Program reduct(const Program& p, const LiteralSet& x) {
    Program out;
    for (const auto& r : p.rules) {
        if (!intersects(r.naf_body, x)) {
            out.rules.push_back(Rule{r.head, r.pos_body, {}});
        }
    }
    return out;
}

namespace {

// consequences(reduct(p, x)) without materializing the reduct.
ClosureResult closure_of_reduct(const Program& p, const LiteralSet& x) {
    LiteralSet derived;
    bool       changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules) {
            if (r.is_constraint() || intersects(r.naf_body, x) || derived.contains(*r.head)) {
                continue;
            }
            if (!is_subset(r.pos_body, derived)) {
                continue;
            }
            if (derived.contains(r.head->complement())) {
                return ClosureResult::the_inconsistent_closure();
            }
            derived.insert(*r.head);
            changed = true;
        }
    }
    for (const auto& r : p.rules) {
        if (r.is_constraint() && !intersects(r.naf_body, x) && is_subset(r.pos_body, derived)) {
            return ClosureResult::constraint_violated();
        }
    }
    return ClosureResult::consistent_set(std::move(derived));
}

// Invokes fn once per consistent subset of base.
void for_each_consistent_subset(const LiteralSet&                        base,
                                const std::function<void(const LiteralSet&)>& fn) {
    // Group by atom: each atom contributes none, the positive literal, or
    // the negative literal, restricted to the signs present in the base.
    std::vector<std::vector<Literal>> choices;
    for (auto it = base.begin(); it != base.end();) {
        std::vector<Literal> signs;
        const Atom&          atom = it->atom;
        for (; it != base.end() && it->atom == atom; ++it) {
            signs.push_back(*it);
        }
        choices.push_back(std::move(signs));
    }
    LiteralSet                               current;
    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == choices.size()) {
            fn(current);
            return;
        }
        recurse(i + 1);
        for (const auto& lit : choices[i]) {
            current.insert(lit);
            recurse(i + 1);
            current.erase(lit);
        }
    };
    recurse(0);
}

bool satisfies(const LiteralSet& model, const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(), [&](const Rule& r) {
        bool body_holds = is_subset(r.pos_body, model) && !intersects(r.naf_body, model);
        if (!body_holds) {
            return true;
        }
        return r.head && model.contains(*r.head);
    });
}

}  // namespace

AnswerSetResult answer_sets(const Program& p) {
    // The inconsistent candidate: its reduct keeps exactly the naf-free
    // rules. If that closure is inconsistent, no consistent candidate can
    // qualify either (every reduct contains the naf-free rules), so the
    // inconsistent set is the single answer set.
    Program naf_free;
    for (const auto& r : p.rules) {
        if (r.naf_body.empty()) {
            naf_free.rules.push_back(r);
        }
    }
    if (consequences(naf_free).kind == ClosureResult::Kind::inconsistent) {
        return AnswerSetResult::the_inconsistent_set();
    }

    LiteralSet heads;
    for (const auto& r : p.rules) {
        if (r.head) {
            heads.insert(*r.head);
        }
    }
    std::set<LiteralSet> found;
    for_each_consistent_subset(heads, [&](const LiteralSet& candidate) {
        if (closure_of_reduct(p, candidate) == ClosureResult::consistent_set(candidate)) {
            found.insert(candidate);
        }
    });
    if (found.empty()) {
        return AnswerSetResult::no_answer_sets();
    }
    return AnswerSetResult::some(found);
}

bool is_consistent(const Program& p) { return answer_sets(p).is_sets(); }

bool equivalent(const Program& a, const Program& b) {
    return answer_sets(a) == answer_sets(b);
}

std::vector<SEModel> se_models(const Program& p) {
    return se_models(p, literal_base(p));
}

std::vector<SEModel> se_models(const Program& p, const LiteralSet& base) {
    std::set<SEModel> out;
    for_each_consistent_subset(base, [&](const LiteralSet& there) {
        if (!satisfies(there, p)) {
            return;
        }
        Program reduced = reduct(p, there);
        // All subsets of `there`, consistency inherited.
        std::vector<Literal> elems(there.begin(), there.end());
        for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
            LiteralSet here;
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (mask & (std::size_t{1} << i)) {
                    here.insert(elems[i]);
                }
            }
            if (satisfies(here, reduced)) {
                out.insert(SEModel{std::move(here), there});
            }
        }
    });
    return {out.begin(), out.end()};
}

bool strongly_equivalent(const Program& a, const Program& b) {
    LiteralSet base = set_union(literal_base(a), literal_base(b));
    return se_models(a, base) == se_models(b, base);
}

}  // namespace asprev
