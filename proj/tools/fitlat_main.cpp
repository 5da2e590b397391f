// fitlat: evaluate bilattice logic programs, compute hypothesis support
// and hypothesis-founded models, and cross-check the classical
// well-founded and Kripke-Kleene semantics on the negation fragment.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fitlat/datalog.hpp"
#include "fitlat/engine.hpp"
#include "fitlat/errors.hpp"
#include "fitlat/ground.hpp"
#include "fitlat/parser.hpp"
#include "fitlat/report.hpp"

namespace {

using nlohmann::json;
using namespace fitlat;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitFragment = 3;
constexpr int kExitIterationCap = 4;

struct Options {
    std::string program_path;
    std::string hypothesis_path;
    std::string assume;  // "", "H_F", or "H_U"
    std::string bilattice = "four";
    std::string format = "table";
    bool trace = false;
    std::size_t max_iters = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GroundProgram load_ground_program(const Options& opt, BilatticePtr& bl) {
    bl = Bilattice::from_selector(opt.bilattice);
    Program p = parse_program(read_file(opt.program_path), bl);
    return ground(p);
}

Interpretation load_hypothesis(const Options& opt, const GroundProgram& g) {
    if (!opt.hypothesis_path.empty() && !opt.assume.empty())
        throw ConfigError("give either --hypothesis or --assume, not both");
    if (!opt.assume.empty()) {
        if (opt.assume == "H_U")
            return Interpretation(g.herbrand_base(), g.bilattice());
        if (opt.assume == "H_F") {
            if (!(*g.bilattice() == *Bilattice::four()))
                throw ConfigError(
                    "--assume H_F needs the four bilattice; got " +
                    g.bilattice()->name());
            Interpretation h(g.herbrand_base(), g.bilattice());
            for (const Atom& a : g.herbrand_base()->atoms())
                h.set(a, g.bilattice()->bot_t());
            return h;
        }
        throw ConfigError("--assume takes H_F or H_U, not '" + opt.assume +
                          "'");
    }
    if (opt.hypothesis_path.empty())
        throw ConfigError("this command needs --hypothesis or --assume");
    return parse_hypothesis(read_file(opt.hypothesis_path),
                            g.herbrand_base(), g.bilattice());
}

json values_json(const Interpretation& i) {
    json values = json::object();
    for (const auto& [atom, value] : i.defined())
        values[atom.to_string()] = i.bilattice()->print(value);
    return values;
}

json atoms_json(const Interpretation& i) {
    json atoms = json::array();
    for (const auto& [atom, value] : i.defined())
        atoms.push_back(atom.to_string());
    return atoms;
}

json atom_set_json(const std::set<Atom>& atoms) {
    json out = json::array();
    for (const Atom& a : atoms) out.push_back(a.to_string());
    return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_eval(const Options& opt) {
    BilatticePtr bl;
    GroundProgram g = load_ground_program(opt, bl);
    Interpretation result = immediate_consequence(g, g.facts());
    if (opt.format == "json") {
        json doc{{"command", "eval"},
                 {"bilattice", bl->name()},
                 {"atoms", atoms_json(result)},
                 {"values", values_json(result)}};
        emit(doc);
    } else {
        std::cout << render_table(result);
    }
    return kExitOk;
}

int run_support(const Options& opt) {
    BilatticePtr bl;
    GroundProgram g = load_ground_program(opt, bl);
    Interpretation h = load_hypothesis(opt, g);
    SupportResult r = support(g, h);
    if (opt.format == "json") {
        json pf = json::array();
        for (const auto& step : r.pf_trace) pf.push_back(atom_set_json(step));
        json doc{{"command", "support"},
                 {"bilattice", bl->name()},
                 {"atoms", atoms_json(r.support)},
                 {"values", values_json(r.support)},
                 {"iterations", r.iterations},
                 {"incompatible", atom_set_json(r.incompatible)},
                 {"pf", pf}};
        emit(doc);
        return kExitOk;
    }
    if (opt.trace) {
        std::cout << "incompatible: " << render_atom_set(r.incompatible)
                  << "\n";
        for (std::size_t i = 0; i < r.pf_trace.size(); ++i)
            std::cout << "pf[" << i
                      << "]: " << render_atom_set(r.pf_trace[i]) << "\n";
        std::cout << "iterations: " << r.iterations << "\n";
        std::cout << "support:\n";
    }
    std::cout << render_table(r.support);
    return kExitOk;
}

int run_sem(const Options& opt) {
    BilatticePtr bl;
    GroundProgram g = load_ground_program(opt, bl);
    Interpretation h = load_hypothesis(opt, g);
    SemanticsResult r = h_founded_semantics(g, h, opt.max_iters);
    if (opt.format == "json") {
        json trace = json::array();
        for (const Interpretation& stage : r.stage_trace)
            trace.push_back(values_json(stage));
        json doc{{"command", "sem"},
                 {"bilattice", bl->name()},
                 {"atoms", atoms_json(r.model)},
                 {"values", values_json(r.model)},
                 {"iterations", r.iterations},
                 {"trace", trace}};
        emit(doc);
        return kExitOk;
    }
    if (opt.trace) {
        for (std::size_t n = 0; n < r.stage_trace.size(); ++n) {
            std::cout << "stage[" << n << "]:\n";
            const Interpretation& stage = r.stage_trace[n];
            if (n == 0) {
                std::cout << render_table(stage);
                continue;
            }
            // Later stages list only the delta against the previous one.
            const Interpretation& prev = r.stage_trace[n - 1];
            for (const Atom& a : g.herbrand_base()->atoms())
                if (!(stage.value(a) == prev.value(a)))
                    std::cout << a.to_string() << " = "
                              << bl->print(stage.value(a)) << "\n";
        }
        std::cout << "iterations: " << r.iterations << "\n";
        std::cout << "model:\n";
    }
    std::cout << render_table(r.model);
    return kExitOk;
}

int run_oracle(const Options& opt, bool wfs) {
    BilatticePtr bl;
    GroundProgram g = load_ground_program(opt, bl);
    DatalogProgram dp = to_datalog(g);
    PartialInterpretation pi =
        wfs ? well_founded(dp) : kripke_kleene(dp);
    Interpretation result = to_three_valued(pi, g.herbrand_base());
    if (opt.format == "json") {
        json doc{{"command", wfs ? "wfs" : "kk"},
                 {"bilattice", bl->name()},
                 {"atoms", atoms_json(result)},
                 {"values", values_json(result)}};
        emit(doc);
    } else {
        std::cout << render_table(result);
    }
    return kExitOk;
}

int run_check(const Options& opt) {
    BilatticePtr bl;
    GroundProgram g = load_ground_program(opt, bl);
    DatalogProgram dp = to_datalog(g);

    Interpretation wfs_oracle =
        to_three_valued(well_founded(dp), g.herbrand_base());
    Interpretation kk_oracle =
        to_three_valued(kripke_kleene(dp), g.herbrand_base());

    Interpretation all_false(g.herbrand_base(), g.bilattice());
    for (const Atom& a : g.herbrand_base()->atoms())
        all_false.set(a, g.bilattice()->bot_t());
    Interpretation all_under(g.herbrand_base(), g.bilattice());

    Interpretation sem_f =
        h_founded_semantics(g, all_false, opt.max_iters).model;
    Interpretation sem_u =
        h_founded_semantics(g, all_under, opt.max_iters).model;

    auto diff = [&](const Interpretation& oracle,
                    const Interpretation& model) {
        std::vector<std::tuple<Atom, Value, Value>> out;
        for (const Atom& a : g.herbrand_base()->atoms())
            if (!(oracle.value(a) == model.value(a)))
                out.emplace_back(a, oracle.value(a), model.value(a));
        return out;
    };
    auto wfs_diff = diff(wfs_oracle, sem_f);
    auto kk_diff = diff(kk_oracle, sem_u);

    if (opt.format == "json") {
        auto mismatches = [&](const auto& d) {
            json out = json::array();
            for (const auto& [a, expected, actual] : d)
                out.push_back({{"atom", a.to_string()},
                               {"oracle", bl->print(expected)},
                               {"sem", bl->print(actual)}});
            return out;
        };
        json doc{{"command", "check"},
                 {"bilattice", bl->name()},
                 {"wfs_match", wfs_diff.empty()},
                 {"kk_match", kk_diff.empty()},
                 {"mismatches",
                  {{"wfs", mismatches(wfs_diff)}, {"kk", mismatches(kk_diff)}}}};
        emit(doc);
    } else {
        auto print_side = [&](const char* name, const auto& d) {
            if (d.empty()) {
                std::cout << name << ": MATCH\n";
                return;
            }
            std::cout << name << ": MISMATCH\n";
            for (const auto& [a, expected, actual] : d)
                std::cout << "  " << a.to_string() << ": oracle="
                          << bl->print(expected) << " sem=" << bl->print(actual)
                          << "\n";
        };
        print_side("wfs", wfs_diff);
        print_side("kk", kk_diff);
    }
    return wfs_diff.empty() && kk_diff.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Bilattice logic programs: evaluation, hypothesis support, "
        "hypothesis-founded semantics, and classical-semantics checks"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_hypothesis,
                          bool with_iters) {
        cmd->add_option("-p,--program", opt.program_path,
                        "Program file (facts and rules)")
            ->required();
        cmd->add_option("--bilattice", opt.bilattice,
                        "Bilattice selector: four, product:BASE[,BASE], or "
                        "interval:BASE with BASE one of bool, chainN, unit");
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_flag("--trace", opt.trace,
                      "Show iteration traces in table output");
        if (with_hypothesis) {
            cmd->add_option("-H,--hypothesis", opt.hypothesis_path,
                            "Hypothesis file (fact lines)");
            cmd->add_option("--assume", opt.assume,
                            "Hypothesis preset: H_F (everywhere false, four "
                            "only) or H_U (everywhere underdefined)");
        }
        if (with_iters)
            cmd->add_option("--max-iters", opt.max_iters,
                            "Iteration cap for the semantics fixpoint "
                            "(default 10*|HB|+10)");
    };

    CLI::App* eval_cmd =
        app.add_subcommand("eval", "Apply the consequence operator to the "
                                   "program's facts and print the result");
    add_common(eval_cmd, false, false);
    CLI::App* support_cmd = app.add_subcommand(
        "support", "Compute the maximal sound part of a hypothesis");
    add_common(support_cmd, true, false);
    CLI::App* sem_cmd = app.add_subcommand(
        "sem", "Compute the hypothesis-founded semantics fixpoint");
    add_common(sem_cmd, true, true);
    CLI::App* wfs_cmd = app.add_subcommand(
        "wfs", "Well-founded semantics of a negation-fragment program");
    add_common(wfs_cmd, false, false);
    CLI::App* kk_cmd = app.add_subcommand(
        "kk", "Kripke-Kleene semantics of a negation-fragment program");
    add_common(kk_cmd, false, false);
    CLI::App* check_cmd = app.add_subcommand(
        "check", "Compare the fixpoint semantics under the all-false and "
                 "all-underdefined presets against the classical semantics");
    add_common(check_cmd, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(opt);
        if (support_cmd->parsed()) return run_support(opt);
        if (sem_cmd->parsed()) return run_sem(opt);
        if (wfs_cmd->parsed()) return run_oracle(opt, true);
        if (kk_cmd->parsed()) return run_oracle(opt, false);
        if (check_cmd->parsed()) return run_check(opt);
    } catch (const FragmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFragment;
    } catch (const IterationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "  previous stage: " << e.previous_stage << "\n"
                  << "  last stage:     " << e.last_stage << "\n";
        return kExitIterationCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
