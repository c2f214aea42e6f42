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

#include "doctest.h"

#include <algorithm>

#include "asprev/postulates.hpp"
#include "asprev/semantics.hpp"
#include "helpers.hpp"

using namespace asprev;
using test::lits;
using test::prog;
using test::sets;

TEST_CASE("consequences computes the positive closure") {
    CHECK(consequences(prog("a. b :- a. c :- not d.")) ==
          ClosureResult::consistent_set(lits({"a", "b"})));
    CHECK(consequences(Program{}) == ClosureResult::consistent_set({}));
    CHECK(consequences(prog("a. -a.")) == ClosureResult::the_inconsistent_closure());
}

TEST_CASE("consequences reports fired constraints") {
    CHECK(consequences(prog("a. :- a.")) == ClosureResult::constraint_violated());
    // A residual naf body keeps a constraint from firing.
    CHECK(consequences(prog("a. :- a, not b.")) ==
          ClosureResult::consistent_set(lits({"a"})));
    // Once the closure is inconsistent it is logically closed; a fired
    // constraint no longer matters.
    CHECK(consequences(prog("a. -a. :- a.")) == ClosureResult::the_inconsistent_closure());
}

TEST_CASE("reduct deletes and strips naf bodies") {
    Program p = prog("a. b :- a, not c. c :- not b.");
    CHECK(same_rules(reduct(p, lits({"a", "b"})), prog("a. b :- a.")));

    Program positive = prog("a. b :- a.");
    CHECK(same_rules(reduct(positive, lits({"a", "x"})), positive));

    CHECK(reduct(prog("c :- not b."), lits({"b"})).empty());
}

TEST_CASE("answer_sets on the running example") {
    CHECK(answer_sets(prog("a. b :- a, not c. c :- not b.")) == sets({{"a", "b"}, {"a", "c"}}));
}

TEST_CASE("answer_sets markers") {
    CHECK(answer_sets(Program{}) == sets({{}}));
    CHECK(answer_sets(prog("a. -a.")) == AnswerSetResult::the_inconsistent_set());
    CHECK(answer_sets(prog("a :- not a.")) == AnswerSetResult::no_answer_sets());
}

TEST_CASE("constraints filter candidates instead of exploding") {
    CHECK(answer_sets(prog("a. :- a.")) == AnswerSetResult::no_answer_sets());
    CHECK(answer_sets(prog("a. b. :- a, b.")) == AnswerSetResult::no_answer_sets());
    CHECK(answer_sets(prog("a :- not b. b :- not a. :- a.")) == sets({{"b"}}));
    // A contradiction guarded by naf yields no answer sets rather than the
    // inconsistent one.
    CHECK(answer_sets(prog("a. -a :- not b.")) == AnswerSetResult::no_answer_sets());
}

TEST_CASE("is_consistent counts both failure modes as inconsistent") {
    CHECK(is_consistent(prog("a.")));
    CHECK_FALSE(is_consistent(prog("a. -a.")));
    CHECK_FALSE(is_consistent(prog("a :- not a.")));
}

TEST_CASE("equivalence compares answer-set families") {
    CHECK(equivalent(prog("a."), prog("a. a :- a.")));
    CHECK(equivalent(prog("a :- not b."), prog("a :- not c.")));
    CHECK_FALSE(equivalent(prog("a."), prog("b.")));
}

TEST_CASE("se_models over an explicit base") {
    auto base = lits({"a"});
    auto of_empty = se_models(Program{}, base);
    CHECK(of_empty.size() == 3);  // ({},{}), ({},{a}), ({a},{a})

    CHECK(se_models(prog("a."), base) == std::vector<SEModel>{{lits({"a"}), lits({"a"})}});
    CHECK(se_models(prog(":- a."), base) == std::vector<SEModel>{{{}, {}}});
}

TEST_CASE("strong equivalence") {
    Program p = prog("a. b :- a, not c.");
    CHECK(strongly_equivalent(p, p));
    CHECK(strongly_equivalent(prog("a :- a."), Program{}));
    // Weakly but not strongly equivalent.
    CHECK(equivalent(prog("a :- not b."), prog("a :- not c.")));
    CHECK_FALSE(strongly_equivalent(prog("a :- not b."), prog("a :- not c.")));
}

TEST_CASE("every reported answer set passes the definitional re-check") {
    GeneratorConfig cfg;
    cfg.max_atoms = 4;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        cfg.seed    = seed;
        Program p   = random_program(cfg);
        auto    asr = answer_sets(p);
        if (!asr.is_sets()) {
            continue;
        }
        for (const auto& x : asr.sets) {
            CHECK(consequences(reduct(p, x)) == ClosureResult::consistent_set(x));
        }
    }
}

TEST_CASE("answer sets are incomparable under inclusion") {
    GeneratorConfig cfg;
    cfg.max_atoms = 4;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        cfg.seed  = seed;
        auto asr  = answer_sets(random_program(cfg));
        if (!asr.is_sets()) {
            continue;
        }
        for (const auto& x : asr.sets) {
            for (const auto& y : asr.sets) {
                if (x != y) {
                    CHECK_FALSE(is_subset(x, y));
                }
            }
        }
    }
}

TEST_CASE("strong equivalence is preserved under shared extensions") {
    GeneratorConfig cfg;
    cfg.max_atoms = 3;
    cfg.max_rules = 4;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        cfg.seed  = seed;
        Program p = random_program(cfg);
        cfg.seed  = seed + 500;
        Program q = random_program(cfg);
        bool    se = strongly_equivalent(p, q);
        if (se) {
            CHECK(equivalent(p, q));
            for (std::uint64_t extra = 0; extra < 5; ++extra) {
                cfg.seed  = 9000 + seed * 7 + extra;
                Program r = random_program(cfg);
                CHECK(equivalent(program_union(p, r), program_union(q, r)));
            }
        }
        CHECK(equivalent(p, p));
        if (equivalent(p, q)) {
            CHECK(equivalent(q, p));
        }
    }
    // Exercise the property on a pair that is strongly equivalent but not
    // identical, so it does not hold vacuously.
    Program p = prog("a :- not b.");
    Program q = prog("a :- not b. a :- a.");
    REQUIRE(strongly_equivalent(p, q));
    GeneratorConfig cfg2;
    cfg2.max_atoms = 3;
    cfg2.max_rules = 4;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        cfg2.seed = seed;
        Program r = random_program(cfg2);
        CHECK(equivalent(program_union(p, r), program_union(q, r)));
    }
}

TEST_CASE("to_string of answer-set results") {
    CHECK(to_string(answer_sets(prog("a. -b."))) == "{{a, -b}}");
    CHECK(to_string(AnswerSetResult::the_inconsistent_set()) == "{L}");
    CHECK(to_string(AnswerSetResult::no_answer_sets()) == "{}");
}
