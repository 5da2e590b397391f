#include "fitlat/engine.hpp"

#include <string>
#include <utility>

#include "fitlat/errors.hpp"

namespace fitlat {

Interpretation immediate_consequence(const GroundProgram& g,
                                     const Interpretation& i) {
    Interpretation out(g.herbrand_base(), g.bilattice());
    for (const auto& [head, body] : g.clauses()) {
        auto rv = robust_value(i, body);
        if (rv) out.set(head, *rv);
    }
    return out;
}

bool is_model(const GroundProgram& g, const Interpretation& i) {
    for (const auto& [head, body] : g.clauses()) {
        auto rv = robust_value(i, body);
        if (rv && !(i.value(head) == *rv)) return false;
    }
    return true;
}

bool is_sound(const GroundProgram& g, const Interpretation& hypothesis) {
    const Interpretation& facts = g.facts();
    if (!facts.compatible_with(hypothesis)) return false;
    Interpretation consequences =
        immediate_consequence(g, facts.knowledge_join(hypothesis));
    return hypothesis.restrict_to(g.heads()).is_part_of(consequences);
}

namespace {

// Drops a set of atoms from an interpretation.
Interpretation drop(const Interpretation& i, const std::set<Atom>& atoms) {
    if (atoms.empty()) return i;
    std::set<Atom> keep;
    for (const auto& [a, v] : i.defined())
        if (!atoms.count(a)) keep.insert(a);
    return i.restrict_to(keep);
}

}  // namespace

std::set<Atom> fact_incompatible(const GroundProgram& g,
                                 const Interpretation& hypothesis) {
    const Interpretation& facts = g.facts();
    std::set<Atom> out;
    for (const auto& [a, v] : hypothesis.defined())
        if (facts.defines(a) && !(facts.value(a) == v)) out.insert(a);
    return out;
}

std::vector<std::set<Atom>> compute_pf(const GroundProgram& g,
                                       const Interpretation& hypothesis) {
    const Interpretation& facts = g.facts();
    Interpretation base = drop(hypothesis, fact_incompatible(g, hypothesis));

    auto clauses = g.clauses();
    std::vector<std::set<Atom>> trace{{}};
    while (true) {
        const std::set<Atom>& prev = trace.back();
        Interpretation v = facts.knowledge_join(drop(base, prev));
        std::set<Atom> next;
        for (const auto& [head, body] : clauses) {
            auto rv = robust_value(v, body);
            if (!rv || !(*rv == hypothesis.value(head))) next.insert(head);
        }
        if (next == prev) break;
        trace.push_back(std::move(next));
    }
    return trace;
}

SupportResult support(const GroundProgram& g,
                      const Interpretation& hypothesis) {
    SupportResult r{hypothesis, fact_incompatible(g, hypothesis),
                    compute_pf(g, hypothesis), 0};
    r.support = drop(drop(hypothesis, r.incompatible), r.pf_trace.back());
    r.iterations = r.pf_trace.size() - 1;
    return r;
}

namespace {

std::string render_stage(const Interpretation& i) {
    std::string out;
    for (const auto& [a, v] : i.defined()) {
        if (!out.empty()) out += ", ";
        out += a.to_string() + " = " + i.bilattice()->print(v);
    }
    return out.empty() ? "(everything Under)" : out;
}

}  // namespace

SemanticsResult h_founded_semantics(const GroundProgram& g,
                                    const Interpretation& hypothesis,
                                    std::size_t max_iterations) {
    if (max_iterations == 0)
        max_iterations = 10 * g.herbrand_base()->size() + 10;

    SemanticsResult r{Interpretation(g.herbrand_base(), g.bilattice()),
                      {g.facts()},
                      0};
    while (true) {
        const Interpretation& current = r.stage_trace.back();
        // The consequence operator always runs over the original clauses;
        // only the support sees the stage interpretation as a fact layer.
        Interpretation next = immediate_consequence(g, current)
                                  .knowledge_join(
                                      support(g.with_facts(current),
                                              hypothesis).support);
        if (next == current) break;
        if (r.stage_trace.size() > max_iterations)
            throw IterationLimitError(
                "hypothesis-founded semantics did not settle within " +
                    std::to_string(max_iterations) + " iterations",
                render_stage(current), render_stage(next));
        r.stage_trace.push_back(std::move(next));
    }
    r.model = r.stage_trace.back();
    r.iterations = r.stage_trace.size() - 1;
    return r;
}

}  // namespace fitlat
