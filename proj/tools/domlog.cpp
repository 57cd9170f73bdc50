/*
 *  Copyright (c) 2026 The domlog authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

// Command-line front end: solving and differential checks over finite
// domains given as poset files or formal contexts.
//
// Exit codes: 0 success, 1 a verification reported a violation, 2 bad
// usage or unparsable input, 3 an operation exceeded its size bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domlog/domlog.hpp"

using nlohmann::json;
using namespace domlog;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// The universe a command works in: either a domain file, or a formal
/// context whose labeled hierarchy becomes the domain.
struct Universe {
    std::optional<fca::FormalContext> ctx;
    std::optional<fca::DerivedDomain> derived;
    std::optional<Domain> plain;

    const Domain& domain() const { return derived ? derived->domain : *plain; }

    io::NameResolver resolver() const {
        return derived ? io::derived_resolver(*ctx, *derived) : io::domain_resolver(*plain);
    }
};

/// Common file options; each verb registers the ones it accepts.
struct Options {
    std::string domain_file;
    std::string context_file;
    std::string format; // "cxt" or "csv"; empty picks by extension
    std::string program_file;
    std::string theory_file;
    std::string clause_text;
    bool json_out = false;
    bool exhaustive = false;
    unsigned seed = 1;
    std::size_t count = 100;
    std::size_t vars = 4;
    std::size_t max_rules = 6;
    std::size_t samples = 4096;
};

fca::FormalContext load_context(const Options& o) {
    std::string fmt = o.format;
    if (fmt.empty())
        fmt = o.context_file.ends_with(".csv") ? "csv" : "cxt";
    const std::string text = read_file(o.context_file);
    return fmt == "csv" ? io::parse_context_csv(text) : io::parse_cxt(text);
}

Universe load_universe(const Options& o) {
    if (o.domain_file.empty() == o.context_file.empty())
        throw Error("exactly one of --domain and --context is required");
    Universe u;
    if (!o.domain_file.empty()) {
        u.plain = io::parse_poset(read_file(o.domain_file));
    } else {
        u.ctx = load_context(o);
        u.derived = fca::to_domain(*u.ctx);
    }
    return u;
}

std::string join_names(const Domain& d, const ElementSet& xs) {
    std::string out;
    for (ElementId e : xs) {
        if (!out.empty())
            out += ' ';
        out += d.name(e);
    }
    return out;
}

json names_json(const Domain& d, const ElementSet& xs) {
    json out = json::array();
    for (ElementId e : xs)
        out.push_back(d.name(e));
    return out;
}

void add_universe_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--domain", o.domain_file, "poset file describing the domain");
    cmd->add_option("--context", o.context_file, "formal context whose hierarchy is the domain");
    cmd->add_option("--format", o.format, "context format: cxt or csv (default: by extension)")
        ->check(CLI::IsMember({"cxt", "csv"}));
}

// ---------------------------------------------------------------- verbs --

int run_check_domain(const Options& o) {
    Universe u = load_universe(o);
    const Domain& d = u.domain();
    if (o.json_out) {
        json out;
        out["elements"] = d.size();
        out["bottom"] = d.name(d.bottom());
        out["cover_pairs"] = d.cover_pairs().size();
        out["names"] = names_json(d, d.all_elements());
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "elements: " << d.size() << "\n";
    std::cout << "bottom: " << d.name(d.bottom()) << "\n";
    std::cout << "cover pairs: " << d.cover_pairs().size() << "\n";
    return 0;
}

int run_entail(const Options& o) {
    Universe u = load_universe(o);
    const Domain& d = u.domain();
    io::NameResolver res = u.resolver();
    Theory t;
    if (!o.theory_file.empty())
        t = io::parse_theory(read_file(o.theory_file), res);
    Clause x = io::parse_clause(o.clause_text, res);
    const bool yes = entails(d, t, x);
    if (o.json_out) {
        json out;
        out["clause"] = io::clause_to_string(d, x);
        out["entails"] = yes;
        out["theory_clauses"] = t.size();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "theory clauses: " << t.size() << "\n";
    std::cout << "entails: " << (yes ? "yes" : "no") << "\n";
    return 0;
}

int run_models(const Options& o) {
    Universe u = load_universe(o);
    const Domain& d = u.domain();
    Theory t;
    if (!o.theory_file.empty())
        t = io::parse_theory(read_file(o.theory_file), u.resolver());
    ElementSet models = model_set(d, t);
    ElementSet mins = d.minimal_elements(models);
    if (o.json_out) {
        json out;
        out["models"] = names_json(d, models);
        out["minimal_models"] = names_json(d, mins);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "models: " << join_names(d, models) << "\n";
    std::cout << "minimal models: " << join_names(d, mins) << "\n";
    return 0;
}

int run_answer_models(const Options& o, bool minimal) {
    Universe u = load_universe(o);
    const Domain& d = u.domain();
    Program p = io::parse_program(read_file(o.program_file), u.resolver());
    ElementSet found = minimal ? enumerate_min_answer_models(d, p) : enumerate_answer_models(d, p);
    if (o.json_out) {
        json out;
        out[minimal ? "min_answer_models" : "answer_models"] = names_json(d, found);
        out["rules"] = p.rules.size();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << (minimal ? "min answer models: " : "answer models: ") << join_names(d, found)
              << "\n";
    return 0;
}

int run_fixpoint(const Options& o) {
    Universe u = load_universe(o);
    const Domain& d = u.domain();
    Program p = io::parse_program(read_file(o.program_file), u.resolver());
    FixpointResult fp = tp_fixpoint(d, p);
    const bool agrees = fp.theory == cons_extensional(d, p);
    if (o.json_out) {
        json out;
        out["iterations"] = fp.iterations;
        out["clauses"] = fp.theory.clause_count();
        out["agrees_with_model_closure"] = agrees;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "iterations: " << fp.iterations << "\n";
        std::cout << "clauses: " << fp.theory.clause_count() << "\n";
        std::cout << "agrees with the model-side closure: " << (agrees ? "yes" : "no") << "\n";
    }
    return agrees ? 0 : 1;
}

int run_asp_solve(const Options& o) {
    asp::ClassicalProgram p = io::parse_classical(read_file(o.program_file));
    std::vector<asp::AnswerSetResult> sets = asp::answer_sets(p);
    if (o.json_out) {
        json out;
        out["answer_sets"] = json::array();
        for (const asp::AnswerSetResult& s : sets) {
            json one;
            one["literals"] = asp::literal_set_string(p.vars, s.literals);
            one["inconsistent_total"] = s.inconsistent_total;
            out["answer_sets"].push_back(one);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "answer sets: " << sets.size() << "\n";
    for (const asp::AnswerSetResult& s : sets)
        std::cout << asp::literal_set_string(p.vars, s.literals)
                  << (s.inconsistent_total ? " (inconsistent total)" : "") << "\n";
    return 0;
}

int run_verify(const Options& o, bool answer_sets_mode) {
    std::vector<asp::ClassicalProgram> programs;
    if (!o.program_file.empty()) {
        programs.push_back(io::parse_classical(read_file(o.program_file)));
    } else {
        std::mt19937 rng(o.seed);
        asp::RandomProgramOptions ro;
        ro.vars = o.vars;
        ro.max_rules = o.max_rules;
        ro.allow_neg = answer_sets_mode;
        for (std::size_t i = 0; i < o.count; ++i)
            programs.push_back(asp::random_classical_program(rng, ro));
    }

    // All random programs share one variable pool, so the interpretation
    // domain is built once.
    std::optional<asp::TvDomain> shared;
    std::size_t failures = 0;
    std::string first_failure;
    for (const asp::ClassicalProgram& p : programs) {
        const asp::TvDomain* tv = nullptr;
        if (!shared || shared->vars != p.vars)
            shared = asp::tv_domain(p.vars);
        tv = &*shared;
        asp::CorrespondenceReport rep = answer_sets_mode
                                     ? asp::verify_answer_set_correspondence(p, tv)
                                     : asp::verify_minimal_model_correspondence(p, tv);
        if (!rep.ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = rep.counterexample + "\nprogram:\n" + io::emit_classical(p);
        }
    }

    if (o.json_out) {
        json out;
        out["programs"] = programs.size();
        out["failures"] = failures;
        if (failures > 0)
            out["first_failure"] = first_failure;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "programs checked: " << programs.size() << "\n";
        if (failures > 0) {
            std::cout << "violations: " << failures << "\n";
            std::cout << first_failure << "\n";
        }
        std::cout << "correspondence: " << (failures == 0 ? "ok" : "VIOLATED") << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_fca_concepts(const Options& o) {
    fca::FormalContext ctx = load_context(o);
    std::vector<fca::Concept> concepts = fca::all_concepts(ctx);
    auto intent_names = [&](const fca::IndexSet& xs) {
        std::string s;
        for (std::size_t m : xs)
            s += (s.empty() ? "" : ", ") + ctx.attributes[m];
        return "{" + s + "}";
    };
    auto extent_names = [&](const fca::IndexSet& xs) {
        std::string s;
        for (std::size_t g : xs)
            s += (s.empty() ? "" : ", ") + ctx.objects[g];
        return "{" + s + "}";
    };
    if (o.json_out) {
        json out;
        out["concepts"] = json::array();
        for (const fca::Concept& c : concepts) {
            json one;
            one["extent"] = extent_names(c.extent);
            one["intent"] = intent_names(c.intent);
            out["concepts"].push_back(one);
        }
        out["count"] = concepts.size();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "concepts: " << concepts.size() << "\n";
    for (const fca::Concept& c : concepts)
        std::cout << intent_names(c.intent) << " -> " << extent_names(c.extent) << "\n";
    return 0;
}

int run_fca_aoc(const Options& o) {
    fca::FormalContext ctx = load_context(o);
    fca::AocPoset aoc = fca::aoc_poset(ctx);
    if (o.json_out) {
        json out;
        out["nodes"] = json::array();
        for (const fca::AocNode& n : aoc.nodes) {
            json one;
            one["display"] = n.display;
            json extent = json::array();
            for (std::size_t g : n.extent)
                extent.push_back(ctx.objects[g]);
            one["extent"] = extent;
            out["nodes"].push_back(one);
        }
        out["count"] = aoc.nodes.size();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "nodes: " << aoc.nodes.size() << "\n";
    for (const fca::AocNode& n : aoc.nodes) {
        std::cout << n.display << ": extent {";
        for (std::size_t i = 0; i < n.extent.size(); ++i)
            std::cout << (i ? ", " : "") << ctx.objects[n.extent[i]];
        std::cout << "}\n";
    }
    return 0;
}

int run_fca_domain(const Options& o) {
    fca::FormalContext ctx = load_context(o);
    fca::DerivedDomain derived = fca::to_domain(ctx);
    std::cout << io::emit_poset(derived.domain);
    return 0;
}

int run_fca_verify_closure(const Options& o) {
    fca::FormalContext ctx = load_context(o);
    fca::ClosureCheckOptions copts;
    copts.force_exhaustive = o.exhaustive;
    copts.seed = o.seed;
    copts.samples = o.samples;
    fca::ClosureCheckReport rep = fca::verify_closure_correspondence(ctx, copts);
    if (o.json_out) {
        json out;
        out["ok"] = rep.ok;
        out["exhaustive"] = rep.exhaustive;
        out["checked"] = rep.checked;
        if (!rep.ok)
            out["counterexample"] = rep.counterexample;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "checked: " << rep.checked << " attribute sets"
                  << (rep.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
        if (!rep.ok)
            std::cout << "counterexample: " << rep.counterexample << "\n";
        std::cout << "closure correspondence: " << (rep.ok ? "ok" : "VIOLATED") << "\n";
    }
    return rep.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and differential checks for clausal logic over finite ordered domains"};
    app.require_subcommand(1);
    Options o;

    CLI::App* check = app.add_subcommand("check-domain", "load a domain and print its shape");
    add_universe_options(check, o);
    check->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* entail_cmd = app.add_subcommand("entail", "decide whether a theory entails a clause");
    add_universe_options(entail_cmd, o);
    entail_cmd->add_option("--theory", o.theory_file, "theory file (omit for the empty theory)");
    entail_cmd->add_option("--clause", o.clause_text, "clause, e.g. \"{st, d}\"")->required();
    entail_cmd->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* models_cmd = app.add_subcommand("models", "list the models of a theory");
    add_universe_options(models_cmd, o);
    models_cmd->add_option("--theory", o.theory_file, "theory file (omit for the empty theory)");
    models_cmd->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* answers = app.add_subcommand("answer-models", "stable worlds of a program");
    add_universe_options(answers, o);
    answers->add_option("--program", o.program_file, "program file")->required();
    answers->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* min_answers =
        app.add_subcommand("min-answer-models", "minimal stable worlds of a program");
    add_universe_options(min_answers, o);
    min_answers->add_option("--program", o.program_file, "program file")->required();
    min_answers->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* fixpoint_cmd = app.add_subcommand(
        "fixpoint", "saturate a negation-free program and compare with its model closure");
    add_universe_options(fixpoint_cmd, o);
    fixpoint_cmd->add_option("--program", o.program_file, "program file")->required();
    fixpoint_cmd->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* solve = app.add_subcommand("asp-solve", "answer sets of a classical program");
    solve->add_option("--program", o.program_file, "classical program file")->required();
    solve->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* vas = app.add_subcommand(
        "verify-answer-sets",
        "check that answer sets match minimal stable worlds over the interpretation domain");
    vas->add_option("--program", o.program_file, "check one classical program file");
    vas->add_option("--count", o.count, "number of random programs (default 100)");
    vas->add_option("--vars", o.vars, "variables per random program (default 4)");
    vas->add_option("--max-rules", o.max_rules, "rule cap per random program (default 6)");
    vas->add_option("--seed", o.seed, "random seed (default 1)");
    vas->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* vmm = app.add_subcommand(
        "verify-minimal-models",
        "check that minimally closed sets match minimal models over the interpretation domain");
    vmm->add_option("--program", o.program_file, "check one classical program file");
    vmm->add_option("--count", o.count, "number of random programs (default 100)");
    vmm->add_option("--vars", o.vars, "variables per random program (default 4)");
    vmm->add_option("--max-rules", o.max_rules, "rule cap per random program (default 6)");
    vmm->add_option("--seed", o.seed, "random seed (default 1)");
    vmm->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* concepts = app.add_subcommand("fca-concepts", "list the concepts of a context");
    concepts->add_option("--context", o.context_file, "context file")->required();
    concepts->add_option("--format", o.format, "cxt or csv")->check(CLI::IsMember({"cxt", "csv"}));
    concepts->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* aoc = app.add_subcommand("fca-aoc", "labeled concepts of a context");
    aoc->add_option("--context", o.context_file, "context file")->required();
    aoc->add_option("--format", o.format, "cxt or csv")->check(CLI::IsMember({"cxt", "csv"}));
    aoc->add_flag("--json", o.json_out, "machine-readable output");

    CLI::App* fdomain =
        app.add_subcommand("fca-domain", "print the domain derived from a context as a poset file");
    fdomain->add_option("--context", o.context_file, "context file")->required();
    fdomain->add_option("--format", o.format, "cxt or csv")->check(CLI::IsMember({"cxt", "csv"}));

    CLI::App* vclosure = app.add_subcommand(
        "fca-verify-closure",
        "check that attribute closure matches clause entailment over the derived domain");
    vclosure->add_option("--context", o.context_file, "context file")->required();
    vclosure->add_option("--format", o.format, "cxt or csv")->check(CLI::IsMember({"cxt", "csv"}));
    vclosure->add_flag("--exhaustive", o.exhaustive, "force the exhaustive check");
    vclosure->add_option("--samples", o.samples, "sample count for large contexts (default 4096)");
    vclosure->add_option("--seed", o.seed, "sampling seed (default 1)");
    vclosure->add_flag("--json", o.json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(check))
            return run_check_domain(o);
        if (app.got_subcommand(entail_cmd))
            return run_entail(o);
        if (app.got_subcommand(models_cmd))
            return run_models(o);
        if (app.got_subcommand(answers))
            return run_answer_models(o, /*minimal=*/false);
        if (app.got_subcommand(min_answers))
            return run_answer_models(o, /*minimal=*/true);
        if (app.got_subcommand(fixpoint_cmd))
            return run_fixpoint(o);
        if (app.got_subcommand(solve))
            return run_asp_solve(o);
        if (app.got_subcommand(vas))
            return run_verify(o, /*answer_sets_mode=*/true);
        if (app.got_subcommand(vmm))
            return run_verify(o, /*answer_sets_mode=*/false);
        if (app.got_subcommand(concepts))
            return run_fca_concepts(o);
        if (app.got_subcommand(aoc))
            return run_fca_aoc(o);
        if (app.got_subcommand(fdomain))
            return run_fca_domain(o);
        if (app.got_subcommand(vclosure))
            return run_fca_verify_closure(o);
    } catch (const BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
