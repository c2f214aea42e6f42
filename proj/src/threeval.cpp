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

#include "asprev/threeval.hpp"

#include <algorithm>
#include <cassert>

namespace asprev {

namespace {

void check_proper(const ThreeValuedInterpretation& x, const char* op) {
    if (x.lattice) {
        if (!x.plus.empty() || !x.minus.empty()) {
            throw std::invalid_argument("inconsistent marker must have empty components");
        }
        throw std::invalid_argument(std::string(op) +
                                    " is undefined for the inconsistent marker");
    }
    if (intersects(x.plus, x.minus)) {
        throw std::invalid_argument("interpretation components must be disjoint");
    }
    for (const auto& l : x.plus) {
        if (x.plus.contains(l.complement())) {
            throw std::invalid_argument("the plus component must be consistent");
        }
    }
}

// Erases every residual naf literal, leaving head <- pos_body.
Program positive_part(const Program& p) {
    Program out;
    for (const auto& r : p.rules) {
        out.rules.push_back(Rule{r.head, r.pos_body, {}});
    }
    return out;
}

}  // namespace

ThreeValuedInterpretation make_interpretation(LiteralSet plus, LiteralSet minus) {
    ThreeValuedInterpretation x{std::move(plus), std::move(minus), false};
    check_proper(x, "make_interpretation");
    return x;
}

std::string to_string(const ThreeValuedInterpretation& x) {
    if (x.lattice) {
        return "(L ; {})";
    }
    return "(" + to_string(x.plus) + " ; " + to_string(x.minus) + ")";
}

Program min_reduct(const Program& p, const ThreeValuedInterpretation& x) {
    check_proper(x, "min_reduct");
    Program out;
    for (const auto& r : p.rules) {
        if (intersects(r.naf_body, x.plus)) {
            continue;
        }
        out.rules.push_back(Rule{r.head, r.pos_body, set_difference(r.naf_body, x.minus)});
    }
    return out;
}

bool is_three_valued_answer_set(const Program& p, const ThreeValuedInterpretation& x) {
    check_proper(x, "is_three_valued_answer_set");
    Program reduced = min_reduct(p, x);
    for (const auto& r : reduced.rules) {
        if (r.is_constraint() && is_subset(r.pos_body, x.plus)) {
            return false;
        }
    }
    auto expected = ClosureResult::consistent_set(x.plus);
    if (consequences(positive_part(reduced)) != expected) {
        return false;
    }
    if (consequences(reduced) != expected) {
        return false;
    }
    // Minimality: no proper subset of the assumptions may already derive
    // x.plus from its min-reduct.
    std::vector<Literal> minus(x.minus.begin(), x.minus.end());
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << minus.size()); ++mask) {
        LiteralSet smaller;
        for (std::size_t i = 0; i < minus.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                smaller.insert(minus[i]);
            }
        }
        ThreeValuedInterpretation y{x.plus, std::move(smaller), false};
        if (consequences(min_reduct(p, y)) == expected) {
            return false;
        }
    }
    return true;
}

std::vector<ThreeValuedInterpretation> three_valued_answer_sets(const Program& p) {
    AnswerSetResult base = answer_sets(p);
    if (base.kind == AnswerSetResult::Kind::none) {
        return {};
    }
    if (base.kind == AnswerSetResult::Kind::inconsistent) {
        return {ThreeValuedInterpretation::inconsistent_marker()};
    }

    std::vector<ThreeValuedInterpretation> out;
    for (const auto& plus : base.sets) {
        // Assumptions can only matter for literals that occur weakly
        // negated and are not already true.
        LiteralSet relevant;
        for (const auto& r : p.rules) {
            for (const auto& l : r.naf_body) {
                if (!plus.contains(l)) {
                    relevant.insert(l);
                }
            }
        }
        auto expected = ClosureResult::consistent_set(plus);
        std::vector<Literal>    pool(relevant.begin(), relevant.end());
        std::vector<LiteralSet> accepted;

        // Subsets by increasing cardinality, lexicographic within a
        // cardinality; supersets of an accepted set can never be minimal.
        for (std::size_t k = 0; k <= pool.size(); ++k) {
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i) {
                idx[i] = i;
            }
            while (true) {
                LiteralSet candidate;
                for (auto i : idx) {
                    candidate.insert(pool[i]);
                }
                bool dominated =
                    std::any_of(accepted.begin(), accepted.end(), [&](const LiteralSet& m) {
                        return is_subset(m, candidate);
                    });
                if (!dominated) {
                    ThreeValuedInterpretation x{plus, candidate, false};
                    if (consequences(min_reduct(p, x)) == expected) {
                        accepted.push_back(candidate);
                    }
                }
                // next k-combination
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == pool.size() - (k - (i - 1))) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        for (auto& minus : accepted) {
            ThreeValuedInterpretation x{plus, std::move(minus), false};
            assert(is_three_valued_answer_set(p, x));
            out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Program canonical_program(const ThreeValuedInterpretation& x) {
    check_proper(x, "canonical_program");
    Program out;
    for (const auto& l : x.plus) {
        out.rules.push_back(fact(l));
    }
    for (const auto& l : x.minus) {
        out.rules.push_back(constraint({l}));
    }
    return out;
}

}  // namespace asprev
