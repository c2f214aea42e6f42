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

#include "asprev/postulates.hpp"

#include <algorithm>
#include <random>

namespace asprev {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }
    std::size_t   below(std::size_t n) { return n == 0 ? 0 : next() % n; }
    bool          chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<std::string> atom_pool(const std::string& prefix, int count) {
    std::vector<std::string> pool;
    for (int i = 1; i <= count; ++i) {
        pool.push_back(prefix + std::to_string(i));
    }
    return pool;
}

Literal random_literal(Rng& rng, const GeneratorConfig& cfg,
                       const std::vector<std::string>& pool) {
    return {Atom{pool[rng.below(pool.size())]}, rng.chance(cfg.prob_classical_negation)};
}

Program generate(Rng& rng, const GeneratorConfig& cfg, const std::vector<std::string>& pool) {
    Program     out;
    std::size_t rule_count = rng.below(static_cast<std::size_t>(cfg.max_rules) + 1);
    for (std::size_t i = 0; i < rule_count; ++i) {
        Rule        rule;
        bool        is_constraint = rng.chance(cfg.prob_constraint);
        std::size_t body_max      = static_cast<std::size_t>(std::max(cfg.max_body, 1));
        std::size_t body_size =
            is_constraint ? 1 + rng.below(body_max)
                          : rng.below(static_cast<std::size_t>(cfg.max_body) + 1);
        if (!is_constraint) {
            rule.head = random_literal(rng, cfg, pool);
        }
        for (std::size_t b = 0; b < body_size; ++b) {
            Literal lit = random_literal(rng, cfg, pool);
            if (rng.chance(cfg.prob_naf)) {
                rule.naf_body.insert(lit);
            }
            else {
                rule.pos_body.insert(lit);
            }
        }
        if (is_constraint && rule.pos_body.empty() && rule.naf_body.empty()) {
            rule.pos_body.insert(random_literal(rng, cfg, pool));
        }
        out.rules.push_back(std::move(rule));
    }
    return out;
}

Program generate_consistent(Rng& rng, const GeneratorConfig& cfg,
                            const std::vector<std::string>& pool) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Program p = generate(rng, cfg, pool);
        if (is_consistent(p)) {
            return p;
        }
    }
    return {};
}

// Rules of the form l <- l, ... never fire and are satisfied by every
// interpretation.
Program generate_tautological(Rng& rng, const GeneratorConfig& cfg,
                              const std::vector<std::string>& pool) {
    Program     out;
    std::size_t count = rng.below(static_cast<std::size_t>(std::max(1, cfg.max_rules / 2)) + 1);
    for (std::size_t i = 0; i < count; ++i) {
        Rule rule;
        rule.head = random_literal(rng, cfg, pool);
        rule.pos_body.insert(*rule.head);
        if (rng.chance(0.5)) {
            rule.pos_body.insert(random_literal(rng, cfg, pool));
        }
        if (rng.chance(0.3)) {
            rule.naf_body.insert(random_literal(rng, cfg, pool));
        }
        out.rules.push_back(std::move(rule));
    }
    return out;
}

// Strong equivalence is preserved by adding tautological rules and by
// adding copies of existing rules with enlarged bodies (the copy is
// satisfied whenever the original is).
Program strongly_equivalent_variant(const Program& p, Rng& rng, const GeneratorConfig& cfg,
                                    const std::vector<std::string>& pool) {
    Program out = p;
    auto    extras = atom_pool("t", 2);
    auto    wide   = pool;
    wide.insert(wide.end(), extras.begin(), extras.end());

    std::size_t tautologies = 1 + rng.below(2);
    for (std::size_t i = 0; i < tautologies; ++i) {
        Rule rule;
        rule.head = random_literal(rng, cfg, wide);
        rule.pos_body.insert(*rule.head);
        if (rng.chance(0.5)) {
            rule.pos_body.insert(random_literal(rng, cfg, wide));
        }
        out.rules.push_back(std::move(rule));
    }
    for (const auto& r : p.rules) {
        if (!rng.chance(0.5)) {
            continue;
        }
        Rule weaker = r;
        Literal lit = random_literal(rng, cfg, pool);
        if (rng.chance(0.5)) {
            weaker.pos_body.insert(lit);
        }
        else {
            weaker.naf_body.insert(lit);
        }
        out.rules.push_back(std::move(weaker));
    }
    return out;
}

// Renames atoms that occur only weakly negated (never in a head or a
// positive body) to fresh names. Such atoms are never derivable, so the
// answer sets are unchanged; the programs are typically no longer strongly
// equivalent.
Program weakly_equivalent_variant(const Program& p, Rng& rng, const GeneratorConfig& cfg,
                                  const std::vector<std::string>& pool) {
    std::set<Atom> derivable;
    std::set<Atom> naf_only;
    for (const auto& r : p.rules) {
        if (r.head) {
            derivable.insert(r.head->atom);
        }
        for (const auto& l : r.pos_body) {
            derivable.insert(l.atom);
        }
    }
    for (const auto& r : p.rules) {
        for (const auto& l : r.naf_body) {
            if (!derivable.contains(l.atom)) {
                naf_only.insert(l.atom);
            }
        }
    }
    if (naf_only.empty()) {
        return strongly_equivalent_variant(p, rng, cfg, pool);
    }
    Program out = p;
    for (auto& r : out.rules) {
        LiteralSet renamed;
        for (const auto& l : r.naf_body) {
            renamed.insert(naf_only.contains(l.atom)
                               ? Literal{Atom{l.atom.name + "_w"}, l.negated}
                               : l);
        }
        r.naf_body = std::move(renamed);
    }
    return out;
}

Program facts_program(const LiteralSet& lits) {
    Program out;
    for (const auto& l : lits) {
        out.rules.push_back(fact(l));
    }
    return out;
}

// Answer-set family with the inconsistent answer set represented as an
// extra member, so unions of families stay expressible.
struct Family {
    bool                 lattice = false;
    std::set<LiteralSet> sets;

    static Family of(const AnswerSetResult& r) {
        Family f;
        if (r.kind == AnswerSetResult::Kind::inconsistent) {
            f.lattice = true;
        }
        else {
            f.sets.insert(r.sets.begin(), r.sets.end());
        }
        return f;
    }

    void merge(const Family& o) {
        lattice = lattice || o.lattice;
        sets.insert(o.sets.begin(), o.sets.end());
    }

    bool subset_of(const Family& o) const {
        if (lattice && !o.lattice) {
            return false;
        }
        return std::all_of(sets.begin(), sets.end(),
                           [&](const LiteralSet& s) { return o.sets.contains(s); });
    }

    bool operator==(const Family&) const = default;

    std::string str() const {
        std::string out = "{";
        if (lattice) {
            out += "L";
        }
        for (const auto& s : sets) {
            if (out.size() > 1) {
                out += ", ";
            }
            out += to_string(s);
        }
        return out + "}";
    }
};

// The single-program candidates a revision induces: the merged program of
// each trace. Empty when the outcome is not a family of sets.
std::vector<Program> merged_candidates(const RevisionOutcome& outcome) {
    std::set<std::set<Rule>> seen;
    std::vector<Program>     out;
    for (const auto& t : outcome.traces) {
        Program m = merged_program(t);
        if (seen.insert(rule_set(m)).second) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

bool disjoint_atoms(const Program& a, const Program& b) {
    auto aa = atoms_of(a);
    auto bb = atoms_of(b);
    return std::none_of(aa.begin(), aa.end(), [&](const Atom& x) { return bb.contains(x); });
}

PostulateReport equality_report(std::string name, std::vector<Program> inputs,
                                const std::string& lhs, const std::string& rhs, bool equal) {
    PostulateReport report{std::move(name), std::move(inputs), equal, true, lhs, rhs, {}};
    if (!equal) {
        report.witness = "answer-set families differ: " + lhs + " vs " + rhs;
    }
    return report;
}

PostulateReport unmet(std::string name, std::vector<Program> inputs, std::string why) {
    PostulateReport report{std::move(name), std::move(inputs), true, false, "", "", {}};
    report.lhs = std::move(why);
    return report;
}

}  // namespace

const std::vector<std::pair<std::string, int>>& known_postulates() {
    static const std::vector<std::pair<std::string, int>> table = {
        {"A1", 2},
        {"A2", 2},
        {"A5a", 2},
        {"A5b", 2},
        {"A6", 3},
        {"initialisation", 1},
        {"idempotency", 1},
        {"tautology", 2},
        {"non-interference", 3},
        {"SAbsorption", 3},
        {"absorption", 3},
        {"augmentation", 3},
        {"disjointness", 3},
        {"parallelism", 3},
        {"associativity", 3},
    };
    return table;
}

PostulateReport check_postulate(const std::string& name, const std::vector<Program>& programs) {
    const auto& table = known_postulates();
    auto        it    = std::find_if(table.begin(), table.end(),
                                     [&](const auto& entry) { return entry.first == name; });
    if (it == table.end()) {
        throw std::invalid_argument("unknown postulate: " + name);
    }
    if (static_cast<int>(programs.size()) != it->second) {
        throw std::invalid_argument(name + " expects " + std::to_string(it->second) +
                                    " programs, got " + std::to_string(programs.size()));
    }

    if (name == "initialisation") {
        auto lhs = revise_sequence({Program{}, programs[0]}).answer_sets;
        auto rhs = answer_sets(programs[0]);
        return equality_report(name, programs, to_string(lhs), to_string(rhs), lhs == rhs);
    }
    if (name == "idempotency") {
        auto lhs = revise_sequence({programs[0], programs[0]}).answer_sets;
        auto rhs = answer_sets(programs[0]);
        return equality_report(name, programs, to_string(lhs), to_string(rhs), lhs == rhs);
    }
    if (name == "tautology") {
        bool tautological =
            std::all_of(programs[1].rules.begin(), programs[1].rules.end(), [](const Rule& r) {
                return r.head.has_value() && r.pos_body.contains(*r.head);
            });
        if (!tautological) {
            return unmet(name, programs, "second program is not tautological");
        }
        auto lhs = revise_pair(programs[0], programs[1]).answer_sets;
        auto rhs = answer_sets(programs[0]);
        return equality_report(name, programs, to_string(lhs), to_string(rhs), lhs == rhs);
    }
    if (name == "A1") {
        RevisionOutcome outcome = revise_pair(programs[0], programs[1]);
        PostulateReport report{name, programs, true, true, to_string(outcome.answer_sets), "", {}};
        auto fail = [&](const std::string& why) {
            report.holds   = false;
            report.witness = why;
        };
        if (outcome.answer_sets.is_sets()) {
            if (outcome.answer_sets.sets.empty()) {
                fail("empty family instead of the no-answer-sets marker");
            }
            for (const auto& s : outcome.answer_sets.sets) {
                for (const auto& l : s) {
                    if (s.contains(l.complement())) {
                        fail("answer set " + to_string(s) + " is not consistent");
                    }
                }
            }
            std::set<LiteralSet> from_traces;
            for (const auto& t : outcome.traces) {
                from_traces.insert(t.steps.back().interpretation.plus);
            }
            std::set<LiteralSet> family(outcome.answer_sets.sets.begin(),
                                        outcome.answer_sets.sets.end());
            if (from_traces != family) {
                fail("trace results do not match the reported family");
            }
        }
        return report;
    }
    if (name == "A2") {
        auto reviser = answer_sets(programs[1]);
        auto revised = revise_pair(programs[0], programs[1]).answer_sets;
        if (!reviser.is_sets()) {
            bool holds = revised.kind == reviser.kind;
            auto report = equality_report(name, programs, to_string(revised), to_string(reviser),
                                          holds);
            return report;
        }
        PostulateReport report{name,  programs, true, true, to_string(revised),
                               to_string(reviser), {}};
        if (!revised.is_sets()) {
            report.holds   = false;
            report.witness = "revision yields " + to_string(revised) +
                             " although the reviser has answer sets";
            return report;
        }
        for (const auto& x : reviser.sets) {
            bool extended = std::any_of(revised.sets.begin(), revised.sets.end(),
                                        [&](const LiteralSet& y) { return is_subset(x, y); });
            if (!extended) {
                report.holds   = false;
                report.witness = "no revised answer set extends " + to_string(x);
                return report;
            }
        }
        return report;
    }
    if (name == "A5a" || name == "A5b") {
        auto kind    = name == "A5a" ? AnswerSetResult::Kind::inconsistent
                                     : AnswerSetResult::Kind::none;
        auto reviser = answer_sets(programs[1]);
        auto revised = revise_pair(programs[0], programs[1]).answer_sets;
        bool holds   = (revised.kind == kind) == (reviser.kind == kind);
        return equality_report(name, programs, to_string(revised), to_string(reviser), holds);
    }
    if (name == "A6" || name == "SAbsorption") {
        if (!strongly_equivalent(programs[1], programs[2])) {
            return unmet(name, programs, "programs 2 and 3 are not strongly equivalent");
        }
        AnswerSetResult lhs, rhs;
        if (name == "A6") {
            lhs = revise_pair(programs[0], programs[1]).answer_sets;
            rhs = revise_pair(programs[0], programs[2]).answer_sets;
        }
        else {
            lhs = revise_sequence({programs[0], programs[1], programs[2]}).answer_sets;
            rhs = revise_pair(programs[0], programs[1]).answer_sets;
        }
        return equality_report(name, programs, to_string(lhs), to_string(rhs), lhs == rhs);
    }
    if (name == "absorption") {
        if (!equivalent(programs[1], programs[2])) {
            return unmet(name, programs, "programs 2 and 3 do not have equal answer sets");
        }
        auto lhs = revise_sequence({programs[0], programs[1], programs[2]}).answer_sets;
        auto rhs = revise_pair(programs[0], programs[1]).answer_sets;
        return equality_report(name, programs, to_string(lhs), to_string(rhs), lhs == rhs);
    }
    if (name == "augmentation") {
        if (!Family::of(answer_sets(programs[1])).subset_of(Family::of(answer_sets(programs[2])))) {
            return unmet(name, programs,
                         "answer sets of program 2 are not included in those of program 3");
        }
        auto lhs = revise_sequence({programs[0], programs[1], programs[2]}).answer_sets;
        auto rhs = revise_pair(programs[0], programs[2]).answer_sets;
        return equality_report(name, programs, to_string(lhs), to_string(rhs), lhs == rhs);
    }
    if (name == "non-interference") {
        if (!disjoint_atoms(programs[1], programs[2])) {
            return unmet(name, programs, "programs 2 and 3 share atoms");
        }
        auto lhs = revise_sequence({programs[0], programs[1], programs[2]}).answer_sets;
        auto rhs = revise_sequence({programs[0], programs[2], programs[1]}).answer_sets;
        return equality_report(name, programs, to_string(lhs), to_string(rhs), lhs == rhs);
    }
    if (name == "disjointness") {
        if (!disjoint_atoms(programs[0], programs[1])) {
            return unmet(name, programs, "programs 1 and 2 share atoms");
        }
        auto lhs =
            Family::of(revise_pair(program_union(programs[0], programs[1]), programs[2]).answer_sets);
        Family rhs = Family::of(revise_pair(programs[0], programs[2]).answer_sets);
        rhs.merge(Family::of(revise_pair(programs[1], programs[2]).answer_sets));
        return equality_report(name, programs, lhs.str(), rhs.str(), lhs == rhs);
    }
    if (name == "parallelism") {
        if (!disjoint_atoms(programs[1], programs[2])) {
            return unmet(name, programs, "programs 2 and 3 share atoms");
        }
        auto lhs =
            Family::of(revise_pair(programs[0], program_union(programs[1], programs[2])).answer_sets);
        Family rhs = Family::of(revise_pair(programs[0], programs[1]).answer_sets);
        rhs.merge(Family::of(revise_pair(programs[0], programs[2]).answer_sets));
        return equality_report(name, programs, lhs.str(), rhs.str(), lhs == rhs);
    }
    // associativity: the revision operator maps programs to answer sets, so
    // each grouping is evaluated through the single-program candidates its
    // inner revision induces (the merged programs of the traces).
    auto grouping = [](const Program& inner_base, const Program& inner_incoming,
                       bool outer_on_right, const Program& outer) {
        Family out;
        for (const auto& m : merged_candidates(revise_pair(inner_base, inner_incoming))) {
            auto r = outer_on_right ? revise_pair(m, outer) : revise_pair(outer, m);
            out.merge(Family::of(r.answer_sets));
        }
        return out;
    };
    Family lhs = grouping(programs[0], programs[1], true, programs[2]);
    Family rhs = grouping(programs[1], programs[2], false, programs[0]);
    return equality_report(name, programs, lhs.str(), rhs.str(), lhs == rhs);
}

Program random_program(const GeneratorConfig& cfg) {
    if (cfg.max_atoms < 1) {
        throw std::invalid_argument("random_program requires max_atoms >= 1");
    }
    Rng rng(cfg.seed);
    return generate(rng, cfg, atom_pool("a", cfg.max_atoms));
}

std::vector<Program> postulate_inputs(const std::string& name, const GeneratorConfig& cfg,
                                      int iteration) {
    if (cfg.max_atoms < 1) {
        throw std::invalid_argument("postulate_inputs requires max_atoms >= 1");
    }
    Rng rng(mix(cfg.seed, static_cast<std::uint64_t>(iteration)));
    auto pool = atom_pool("a", cfg.max_atoms);

    GeneratorConfig small = cfg;
    small.max_atoms       = std::min(cfg.max_atoms, 3);
    small.max_rules       = std::min(cfg.max_rules, 4);
    auto pool_a           = atom_pool("a", small.max_atoms);
    auto pool_b           = atom_pool("b", small.max_atoms);
    auto pool_ab          = pool_a;
    pool_ab.insert(pool_ab.end(), pool_b.begin(), pool_b.end());

    if (name == "initialisation" || name == "idempotency") {
        return {generate(rng, cfg, pool)};
    }
    if (name == "A1" || name == "A2" || name == "A5a" || name == "A5b") {
        Program p1 = generate(rng, cfg, pool);
        Program p2 = generate(rng, cfg, pool);
        return {std::move(p1), std::move(p2)};
    }
    if (name == "tautology") {
        Program p1 = generate(rng, cfg, pool);
        Program p2 = generate_tautological(rng, cfg, pool);
        return {std::move(p1), std::move(p2)};
    }
    if (name == "A6" || name == "SAbsorption") {
        Program p1 = generate(rng, cfg, pool);
        Program p2 = generate(rng, cfg, pool);
        Program p3 = strongly_equivalent_variant(p2, rng, cfg, pool);
        return {std::move(p1), std::move(p2), std::move(p3)};
    }
    if (name == "absorption") {
        Program p1 = generate(rng, cfg, pool);
        Program p2 = generate(rng, cfg, pool);
        Program p3 = weakly_equivalent_variant(p2, rng, cfg, pool);
        return {std::move(p1), std::move(p2), std::move(p3)};
    }
    if (name == "augmentation") {
        Program p1  = generate(rng, cfg, pool);
        Program p3  = generate(rng, cfg, pool);
        auto    asr = answer_sets(p3);
        Program p2  = asr.is_sets() ? facts_program(asr.sets[rng.below(asr.sets.size())]) : p3;
        return {std::move(p1), std::move(p2), std::move(p3)};
    }
    if (name == "non-interference") {
        Program p2 = generate_consistent(rng, small, pool_a);
        Program p3 = generate_consistent(rng, small, pool_b);
        Program p1 = generate(rng, small, pool_ab);
        return {std::move(p1), std::move(p2), std::move(p3)};
    }
    if (name == "disjointness") {
        Program p1 = generate(rng, small, pool_a);
        Program p2 = generate(rng, small, pool_b);
        Program p3 = generate(rng, small, pool_ab);
        return {std::move(p1), std::move(p2), std::move(p3)};
    }
    if (name == "parallelism") {
        Program p1 = generate(rng, small, pool_ab);
        Program p2 = generate(rng, small, pool_a);
        Program p3 = generate(rng, small, pool_b);
        return {std::move(p1), std::move(p2), std::move(p3)};
    }
    if (name == "associativity") {
        Program p1 = generate(rng, small, pool_a);
        Program p2 = generate(rng, small, pool_ab);
        Program p3 = generate(rng, small, pool_ab);
        return {std::move(p1), std::move(p2), std::move(p3)};
    }
    throw std::invalid_argument("unknown postulate: " + name);
}

std::vector<PostulateSummary> fuzz_postulates(const GeneratorConfig& cfg, int iterations,
                                              const std::vector<std::string>& postulate_set) {
    if (iterations < 1) {
        throw std::invalid_argument("fuzz_postulates requires iterations >= 1");
    }
    std::vector<PostulateSummary> out;
    for (const auto& name : postulate_set) {
        PostulateSummary summary;
        summary.postulate = name;
        for (int k = 0; k < iterations; ++k) {
            auto inputs = postulate_inputs(name, cfg, k);
            auto report = check_postulate(name, inputs);
            if (!report.precondition_met) {
                ++summary.precondition_unmet;
            }
            else if (report.holds) {
                ++summary.passes;
            }
            else {
                ++summary.failures;
                summary.counterexamples.push_back(std::move(report));
            }
        }
        out.push_back(std::move(summary));
    }
    return out;
}

}  // namespace asprev
