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
#include "asprev/threeval.hpp"
#include "helpers.hpp"

using namespace asprev;
using test::lits;
using test::prog;

namespace {

ThreeValuedInterpretation interp(std::initializer_list<std::string_view> plus,
                                 std::initializer_list<std::string_view> minus) {
    return make_interpretation(lits(plus), lits(minus));
}

std::vector<ThreeValuedInterpretation> interps(
    std::initializer_list<ThreeValuedInterpretation> list) {
    std::vector<ThreeValuedInterpretation> out(list);
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal assumption sets recomputed over the whole literal base of the
// program rather than just its weakly negated literals.
std::vector<ThreeValuedInterpretation> full_base_three_valued(const Program& p) {
    auto base = answer_sets(p);
    if (base.kind == AnswerSetResult::Kind::none) {
        return {};
    }
    if (base.kind == AnswerSetResult::Kind::inconsistent) {
        return {ThreeValuedInterpretation::inconsistent_marker()};
    }
    LiteralSet all;
    for (const auto& atom : atoms_of(p)) {
        all.insert(Literal{atom, false});
        all.insert(Literal{atom, true});
    }
    std::vector<ThreeValuedInterpretation> out;
    for (const auto& plus : base.sets) {
        std::vector<Literal> pool;
        for (const auto& l : all) {
            if (!plus.contains(l)) {
                pool.push_back(l);
            }
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
            LiteralSet minus;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (mask & (std::size_t{1} << i)) {
                    minus.insert(pool[i]);
                }
            }
            auto x = make_interpretation(plus, minus);
            if (is_three_valued_answer_set(p, x)) {
                out.push_back(std::move(x));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("min_reduct erases covered assumptions and deletes clashing rules") {
    Program p = prog("a :- not b. a :- not c.");
    CHECK(same_rules(min_reduct(p, interp({"a"}, {"b"})), prog("a. a :- not c.")));
    CHECK(same_rules(min_reduct(p, interp({}, {})), p));
    CHECK(min_reduct(prog("b :- a, not c."), interp({"c"}, {})).empty());
}

TEST_CASE("three-valued answer set membership") {
    CHECK(is_three_valued_answer_set(prog("a :- not b."), interp({"a"}, {"b"})));
    // Non-minimal assumption sets are rejected.
    CHECK_FALSE(
        is_three_valued_answer_set(prog("a :- not b. a :- not c."), interp({"a"}, {"b", "c"})));
    CHECK(is_three_valued_answer_set(Program{}, interp({}, {})));
}

TEST_CASE("membership requires the erased reduct to derive exactly plus") {
    // ({a}, {}) leaves b underivable only while "not c" is read as a fresh
    // atom; erasing it derives b as well, so the pair is not a three-valued
    // answer set even though the naf-as-atom closure matches.
    Program p = prog("a. b :- a, not c.");
    CHECK_FALSE(is_three_valued_answer_set(p, interp({"a"}, {})));
    CHECK(is_three_valued_answer_set(p, interp({"a", "b"}, {"c"})));
}

TEST_CASE("constraints reject candidate interpretations") {
    Program p = prog("a. :- a, not b.");
    CHECK_FALSE(is_three_valued_answer_set(p, interp({"a"}, {"b"})));
}

TEST_CASE("enumeration of three-valued answer sets") {
    CHECK(three_valued_answer_sets(prog("a :- not b. a :- not c.")) ==
          interps({interp({"a"}, {"b"}), interp({"a"}, {"c"})}));
    CHECK(three_valued_answer_sets(prog("a :- b.")) == interps({interp({}, {})}));
    CHECK(three_valued_answer_sets(prog("b :- not a. c :- not -a.")) ==
          interps({interp({"b", "c"}, {"a", "-a"})}));
}

TEST_CASE("markers for the two inconsistency modes") {
    CHECK(three_valued_answer_sets(prog("a :- not a.")).empty());

    auto inconsistent = three_valued_answer_sets(prog("a. -a."));
    REQUIRE(inconsistent.size() == 1);
    CHECK(inconsistent.front().lattice);
    CHECK(inconsistent.front() == ThreeValuedInterpretation::inconsistent_marker());
}

TEST_CASE("canonical_program builds facts plus one constraint per assumption") {
    CHECK(same_rules(canonical_program(interp({"a"}, {"b"})), prog("a. :- b.")));
    CHECK(canonical_program(interp({}, {})).empty());
    CHECK(same_rules(canonical_program(interp({"b", "c"}, {"a", "-a"})),
                     prog("b. c. :- a. :- -a.")));
}

TEST_CASE("operations reject the inconsistent marker and malformed pairs") {
    auto marker = ThreeValuedInterpretation::inconsistent_marker();
    CHECK_THROWS_AS(canonical_program(marker), std::invalid_argument);
    CHECK_THROWS_AS(min_reduct(prog("a."), marker), std::invalid_argument);
    CHECK_THROWS_AS(is_three_valued_answer_set(prog("a."), marker), std::invalid_argument);
    CHECK_THROWS_AS(make_interpretation(lits({"a"}), lits({"a", "b"})), std::invalid_argument);
    CHECK_THROWS_AS(make_interpretation(lits({"a", "-a"}), {}), std::invalid_argument);
    // The minus side may contain complementary pairs.
    CHECK_NOTHROW(make_interpretation(lits({"b"}), lits({"a", "-a"})));
}

TEST_CASE("plus components project onto answer sets") {
    GeneratorConfig cfg;
    cfg.max_atoms = 4;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        cfg.seed  = seed;
        Program p = random_program(cfg);
        auto    asr = answer_sets(p);
        for (const auto& x : three_valued_answer_sets(p)) {
            if (x.lattice) {
                CHECK(asr == AnswerSetResult::the_inconsistent_set());
                continue;
            }
            REQUIRE(asr.is_sets());
            CHECK(std::count(asr.sets.begin(), asr.sets.end(), x.plus) == 1);
            CHECK_FALSE(intersects(x.plus, x.minus));
        }
        // Every answer set is covered by at least one interpretation.
        if (asr.is_sets()) {
            auto family = three_valued_answer_sets(p);
            for (const auto& s : asr.sets) {
                CHECK(std::any_of(family.begin(), family.end(),
                                  [&](const auto& x) { return x.plus == s; }));
            }
        }
    }
}

TEST_CASE("minus components are minimal") {
    GeneratorConfig cfg;
    cfg.max_atoms = 4;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        cfg.seed = seed;
        Program p = random_program(cfg);
        for (const auto& x : three_valued_answer_sets(p)) {
            if (x.lattice) {
                continue;
            }
            std::vector<Literal> minus(x.minus.begin(), x.minus.end());
            for (std::size_t drop = 0; drop < minus.size(); ++drop) {
                LiteralSet smaller;
                for (std::size_t i = 0; i < minus.size(); ++i) {
                    if (i != drop) {
                        smaller.insert(minus[i]);
                    }
                }
                CHECK_FALSE(
                    is_three_valued_answer_set(p, make_interpretation(x.plus, smaller)));
            }
        }
    }
}

TEST_CASE("restriction to weakly negated literals loses nothing") {
    GeneratorConfig cfg;
    cfg.max_atoms = 3;
    cfg.max_rules = 4;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        cfg.seed  = seed;
        Program p = random_program(cfg);
        CHECK(three_valued_answer_sets(p) == full_base_three_valued(p));
    }
    CHECK(three_valued_answer_sets(prog("a :- not b. a :- not c.")) ==
          full_base_three_valued(prog("a :- not b. a :- not c.")));
}

TEST_CASE("interpretations print as pairs") {
    CHECK(to_string(interp({"a", "c"}, {"b", "d"})) == "({a, c} ; {b, d})");
    CHECK(to_string(ThreeValuedInterpretation::inconsistent_marker()) == "(L ; {})");
}
