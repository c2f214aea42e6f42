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

#include "asprev/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "asprev/json_io.hpp"
#include "asprev/postulates.hpp"
#include "asprev/revision.hpp"

namespace asprev::cli {

namespace {

constexpr int exit_ok           = 0;
constexpr int exit_usage        = 1;
constexpr int exit_none         = 2;
constexpr int exit_inconsistent = 3;

Program load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(path + ": cannot read file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_program(buffer.str());
    }
    catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

LiteralSet parse_literal_csv(const std::string& csv) {
    LiteralSet out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t next  = csv.find(',', pos);
        std::string token = csv.substr(pos, next == std::string::npos ? next : next - pos);
        std::size_t first = token.find_first_not_of(" \t");
        if (first != std::string::npos) {
            std::size_t last = token.find_last_not_of(" \t");
            out.insert(make_literal(token.substr(first, last - first + 1)));
        }
        if (next == std::string::npos) {
            break;
        }
        pos = next + 1;
    }
    return out;
}

int exit_code_for(const AnswerSetResult& result) {
    switch (result.kind) {
        case AnswerSetResult::Kind::none: return exit_none;
        case AnswerSetResult::Kind::inconsistent: return exit_inconsistent;
        case AnswerSetResult::Kind::sets: return exit_ok;
    }
    return exit_ok;
}

void print_answer_sets(const AnswerSetResult& result, std::ostream& out) {
    for (const auto& s : result.sets) {
        out << to_string(s) << "\n";
    }
}

std::string inline_program(const Program& p) {
    std::string out = "{";
    for (const auto& r : p.rules) {
        if (out.size() > 1) {
            out += " ";
        }
        out += to_string(r);
    }
    return out + "}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"answer set solving and revision of extended logic programs"};
    app.require_subcommand(1);

    std::string file, base_file, incoming_file, left_file, right_file;
    std::vector<std::string> files;
    std::string wrt_csv, plus_csv, minus_csv, postulates_csv;
    bool        as_json = false, with_trace = false;
    std::uint64_t seed  = 0;
    int           iters = 25;

    auto* solve = app.add_subcommand("solve", "Compute the answer sets of a program");
    solve->add_option("file", file, "program file")->required();
    solve->add_flag("--json", as_json, "emit JSON");

    auto* three = app.add_subcommand("three", "Compute the 3-valued answer sets of a program");
    three->add_option("file", file, "program file")->required();
    three->add_flag("--json", as_json, "emit JSON");

    auto* red = app.add_subcommand("reduct", "Reduct of a program relative to a literal set");
    red->add_option("file", file, "program file")->required();
    red->add_option("--wrt", wrt_csv, "comma-separated literals, e.g. \"a,-b\"");

    auto* minred =
        app.add_subcommand("minreduct", "Min-reduct relative to a 3-valued interpretation");
    minred->add_option("file", file, "program file")->required();
    minred->add_option("--plus", plus_csv, "comma-separated literals taken true");
    minred->add_option("--minus", minus_csv, "comma-separated literals assumed false");

    auto* rem = app.add_subcommand("remainder", "Remainders of a base program by an incoming one");
    rem->add_option("base", base_file, "lower-priority program file")->required();
    rem->add_option("incoming", incoming_file, "higher-priority program file")->required();
    rem->add_flag("--json", as_json, "emit JSON");

    auto* rev = app.add_subcommand("revise", "Revise a sequence of programs, lowest priority first");
    rev->add_option("files", files, "program files, lowest priority first")->required();
    rev->add_flag("--json", as_json, "emit JSON");
    rev->add_flag("--trace", with_trace, "also emit revision traces");

    auto* seeq = app.add_subcommand("se-eq", "Check two programs for strong equivalence");
    seeq->add_option("left", left_file, "program file")->required();
    seeq->add_option("right", right_file, "program file")->required();
    seeq->add_flag("--json", as_json, "emit JSON");

    auto* check = app.add_subcommand("check", "Fuzz the revision operator against its postulates");
    check->add_option("--seed", seed, "generator seed");
    check->add_option("--iters", iters, "instances per postulate")->check(CLI::PositiveNumber);
    check->add_option("--postulates", postulates_csv, "comma-separated postulate names");
    check->add_flag("--json", as_json, "emit JSON");

    std::vector<const char*> argv;
    argv.push_back("asprev");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve) {
            auto result = answer_sets(load_program(file));
            if (as_json) {
                out << json_of(result).dump() << "\n";
            }
            else {
                print_answer_sets(result, out);
            }
            return exit_code_for(result);
        }
        if (*three) {
            auto interps = three_valued_answer_sets(load_program(file));
            if (interps.empty()) {
                if (as_json) {
                    out << nlohmann::json{{"kind", "no-answer-sets"}}.dump() << "\n";
                }
                return exit_none;
            }
            if (interps.front().lattice) {
                if (as_json) {
                    out << nlohmann::json{{"kind", "inconsistent"}}.dump() << "\n";
                }
                return exit_inconsistent;
            }
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& x : interps) {
                    arr.push_back(json_of(x));
                }
                out << nlohmann::json{{"kind", "sets"}, {"interpretations", arr}}.dump() << "\n";
            }
            else {
                for (const auto& x : interps) {
                    out << to_string(x) << "\n";
                }
            }
            return exit_ok;
        }
        if (*red) {
            auto text = render_program(reduct(load_program(file), parse_literal_csv(wrt_csv)));
            if (!text.empty()) {
                out << text << "\n";
            }
            return exit_ok;
        }
        if (*minred) {
            auto x = make_interpretation(parse_literal_csv(plus_csv), parse_literal_csv(minus_csv));
            auto text = render_program(min_reduct(load_program(file), x));
            if (!text.empty()) {
                out << text << "\n";
            }
            return exit_ok;
        }
        if (*rem) {
            auto result = remainders(load_program(base_file), load_program(incoming_file));
            if (result.lattice) {
                if (as_json) {
                    out << nlohmann::json{{"kind", "inconsistent"}}.dump() << "\n";
                }
                return exit_inconsistent;
            }
            if (as_json) {
                nlohmann::json programs = nlohmann::json::array();
                for (const auto& p : result.programs) {
                    programs.push_back(render_program(p));
                }
                out << nlohmann::json{{"kind", "programs"}, {"programs", programs}}.dump() << "\n";
            }
            else {
                for (std::size_t i = 0; i < result.programs.size(); ++i) {
                    out << "% remainder " << i + 1 << "\n";
                    auto text = render_program(result.programs[i]);
                    if (!text.empty()) {
                        out << text << "\n";
                    }
                }
            }
            return exit_ok;
        }
        if (*rev) {
            std::vector<Program> programs;
            for (const auto& f : files) {
                programs.push_back(load_program(f));
            }
            auto outcome = revise_sequence(programs);
            nlohmann::json traces = nlohmann::json::array();
            if (with_trace) {
                for (const auto& t : outcome.traces) {
                    traces.push_back(json_of(t));
                }
            }
            if (as_json) {
                nlohmann::json payload = json_of(outcome.answer_sets);
                if (with_trace) {
                    payload["traces"] = traces;
                }
                out << payload.dump() << "\n";
            }
            else {
                print_answer_sets(outcome.answer_sets, out);
                if (with_trace) {
                    out << traces.dump() << "\n";
                }
            }
            return exit_code_for(outcome.answer_sets);
        }
        if (*seeq) {
            bool eq = strongly_equivalent(load_program(left_file), load_program(right_file));
            if (as_json) {
                out << nlohmann::json{{"strongly_equivalent", eq}}.dump() << "\n";
            }
            else {
                out << (eq ? "strongly equivalent" : "not strongly equivalent") << "\n";
            }
            return exit_ok;
        }
        // check
        std::vector<std::string> names;
        if (postulates_csv.empty()) {
            for (const auto& [name, arity] : known_postulates()) {
                names.push_back(name);
            }
        }
        else {
            std::size_t pos = 0;
            while (pos <= postulates_csv.size()) {
                std::size_t next  = postulates_csv.find(',', pos);
                std::string token = postulates_csv.substr(
                    pos, next == std::string::npos ? next : next - pos);
                if (!token.empty()) {
                    names.push_back(token);
                }
                if (next == std::string::npos) {
                    break;
                }
                pos = next + 1;
            }
        }
        GeneratorConfig cfg;
        cfg.seed       = seed;
        auto summaries = fuzz_postulates(cfg, iters, names);
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : summaries) {
                arr.push_back(json_of(s));
            }
            out << nlohmann::json{{"summaries", arr}}.dump() << "\n";
        }
        else {
            for (const auto& s : summaries) {
                out << s.postulate << ": passes=" << s.passes << " failures=" << s.failures
                    << " precondition_unmet=" << s.precondition_unmet << "\n";
                for (const auto& c : s.counterexamples) {
                    out << "  counterexample:";
                    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
                        out << " P" << i + 1 << " = " << inline_program(c.inputs[i]);
                    }
                    out << " lhs = " << c.lhs << " rhs = " << c.rhs << "\n";
                }
            }
        }
        return exit_ok;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace asprev::cli
