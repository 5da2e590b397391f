// Python bindings: string-driven wrappers around the core operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "fitlat/datalog.hpp"
#include "fitlat/engine.hpp"
#include "fitlat/errors.hpp"
#include "fitlat/parser.hpp"

namespace py = pybind11;
using namespace fitlat;

namespace {

GroundProgram load(const std::string& text, const std::string& selector) {
    BilatticePtr bl = Bilattice::from_selector(selector);
    return ground(parse_program(text, bl));
}

Interpretation load_hypothesis(const GroundProgram& g,
                               const std::string& hypothesis,
                               const std::string& assume) {
    if (!hypothesis.empty() && !assume.empty())
        throw ConfigError("give either hypothesis or assume, not both");
    if (assume == "H_U") return {g.herbrand_base(), g.bilattice()};
    if (assume == "H_F") {
        if (!(*g.bilattice() == *Bilattice::four()))
            throw ConfigError("assume='H_F' needs the four bilattice; got " +
                              g.bilattice()->name());
        Interpretation h(g.herbrand_base(), g.bilattice());
        for (const Atom& a : g.herbrand_base()->atoms())
            h.set(a, g.bilattice()->bot_t());
        return h;
    }
    if (!assume.empty())
        throw ConfigError("assume takes 'H_F' or 'H_U', not '" + assume +
                          "'");
    if (hypothesis.empty())
        throw ConfigError("a hypothesis (text or assume preset) is required");
    return parse_hypothesis(hypothesis, g.herbrand_base(), g.bilattice());
}

std::map<std::string, std::string> table(const Interpretation& i) {
    std::map<std::string, std::string> out;
    for (const auto& [atom, value] : i.defined())
        out[atom.to_string()] = i.bilattice()->print(value);
    return out;
}

std::vector<std::string> atom_list(const std::set<Atom>& atoms) {
    std::vector<std::string> out;
    for (const Atom& a : atoms) out.push_back(a.to_string());
    return out;
}

py::dict eval_program(const std::string& text, const std::string& selector) {
    GroundProgram g = load(text, selector);
    py::dict out;
    out["values"] = table(immediate_consequence(g, g.facts()));
    return out;
}

py::dict support_py(const std::string& text, const std::string& hypothesis,
                    const std::string& assume, const std::string& selector) {
    GroundProgram g = load(text, selector);
    SupportResult r = support(g, load_hypothesis(g, hypothesis, assume));
    py::dict out;
    out["support"] = table(r.support);
    out["incompatible"] = atom_list(r.incompatible);
    py::list pf;
    for (const auto& step : r.pf_trace) pf.append(atom_list(step));
    out["pf"] = pf;
    out["iterations"] = r.iterations;
    return out;
}

py::dict semantics_py(const std::string& text, const std::string& hypothesis,
                      const std::string& assume, const std::string& selector,
                      std::size_t max_iters) {
    GroundProgram g = load(text, selector);
    SemanticsResult r = h_founded_semantics(
        g, load_hypothesis(g, hypothesis, assume), max_iters);
    py::dict out;
    out["model"] = table(r.model);
    py::list trace;
    for (const Interpretation& stage : r.stage_trace)
        trace.append(table(stage));
    out["trace"] = trace;
    out["iterations"] = r.iterations;
    return out;
}

bool is_sound_py(const std::string& text, const std::string& hypothesis,
                 const std::string& selector) {
    GroundProgram g = load(text, selector);
    return is_sound(g, parse_hypothesis(hypothesis, g.herbrand_base(),
                                        g.bilattice()));
}

std::map<std::string, std::string> oracle_py(const std::string& text,
                                             bool wfs) {
    GroundProgram g = load(text, "four");
    DatalogProgram dp = to_datalog(g);
    PartialInterpretation pi = wfs ? well_founded(dp) : kripke_kleene(dp);
    return table(to_three_valued(pi, g.herbrand_base()));
}

py::dict check_py(const std::string& text) {
    GroundProgram g = load(text, "four");
    DatalogProgram dp = to_datalog(g);
    Interpretation wfs_oracle =
        to_three_valued(well_founded(dp), g.herbrand_base());
    Interpretation kk_oracle =
        to_three_valued(kripke_kleene(dp), g.herbrand_base());
    Interpretation all_false(g.herbrand_base(), g.bilattice());
    for (const Atom& a : g.herbrand_base()->atoms())
        all_false.set(a, g.bilattice()->bot_t());
    Interpretation sem_f = h_founded_semantics(g, all_false).model;
    Interpretation sem_u =
        h_founded_semantics(g, Interpretation(g.herbrand_base(),
                                              g.bilattice()))
            .model;
    py::dict out;
    out["wfs_match"] = wfs_oracle == sem_f;
    out["kk_match"] = kk_oracle == sem_u;
    return out;
}

}  // namespace

PYBIND11_MODULE(_fitlat, m) {
    m.doc() = "Bilattice logic programs: evaluation, hypothesis support, "
              "hypothesis-founded semantics, and classical-semantics "
              "oracles";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const IterationLimitError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("eval_program", &eval_program, py::arg("program"),
          py::arg("bilattice") = "four",
          "One consequence step from the program's facts; returns "
          "{'values': {atom: value}} for the robustly settled atoms.");
    m.def("support", &support_py, py::arg("program"),
          py::arg("hypothesis") = "", py::arg("assume") = "",
          py::arg("bilattice") = "four",
          "Maximal sound part of the hypothesis with the incompatibility "
          "set and the PF trace.");
    m.def("semantics", &semantics_py, py::arg("program"),
          py::arg("hypothesis") = "", py::arg("assume") = "",
          py::arg("bilattice") = "four", py::arg("max_iters") = 0,
          "Hypothesis-founded fixpoint model with the stage trace.");
    m.def("is_sound", &is_sound_py, py::arg("program"),
          py::arg("hypothesis"), py::arg("bilattice") = "four",
          "Whether the hypothesis survives one consequence step.");
    m.def("well_founded", [](const std::string& t) { return oracle_py(t, true); },
          py::arg("program"),
          "Well-founded model of a negation-fragment program.");
    m.def("kripke_kleene",
          [](const std::string& t) { return oracle_py(t, false); },
          py::arg("program"),
          "Kripke-Kleene model of a negation-fragment program.");
    m.def("check", &check_py, py::arg("program"),
          "Compare the fixpoint semantics under the all-false and empty "
          "hypotheses against the classical semantics.");
}
