#include "fitlat/datalog.hpp"

#include <utility>
#include <variant>

#include "fitlat/errors.hpp"

namespace fitlat {

DatalogProgram::DatalogProgram(HerbrandBasePtr hb,
                               std::vector<DatalogRule> rules)
    : hb_(std::move(hb)), rules_(std::move(rules)) {
    for (std::size_t i = 0; i < rules_.size(); ++i)
        by_head_[rules_[i].head].push_back(i);
}

const std::vector<std::size_t>& DatalogProgram::rules_for(
    const Atom& a) const {
    auto it = by_head_.find(a);
    return it == by_head_.end() ? none_ : it->second;
}

namespace {

// Disjunctive normal form of a fragment body: a list of conjuncts, each a
// list of literals. The constant T is the empty conjunction.
std::vector<std::vector<Literal>> dnf(const FormulaPtr& f) {
    if (const auto* lit = std::get_if<Literal>(&f->node)) return {{*lit}};
    if (std::holds_alternative<Value>(f->node)) return {{}};
    const auto& bin = std::get<BinaryNode>(f->node);
    auto lhs = dnf(bin.lhs);
    auto rhs = dnf(bin.rhs);
    if (bin.op == BinOp::Join) {
        for (auto& c : rhs) lhs.push_back(std::move(c));
        return lhs;
    }
    std::vector<std::vector<Literal>> out;
    for (const auto& a : lhs)
        for (const auto& b : rhs) {
            std::vector<Literal> c = a;
            c.insert(c.end(), b.begin(), b.end());
            out.push_back(std::move(c));
        }
    return out;
}

}  // namespace

DatalogProgram to_datalog(const GroundProgram& g) {
    if (!is_datalog_neg(g))
        throw FragmentError(
            "the program is outside the negation fragment: it must use the "
            "four-valued bilattice, facts equal to T, and bodies built from "
            "literals, &, | and T only");
    std::vector<DatalogRule> rules;
    for (const auto& [head, body] : g.clauses())
        for (auto& conjunct : dnf(body))
            rules.push_back(DatalogRule{head, std::move(conjunct)});
    return DatalogProgram(g.herbrand_base(), std::move(rules));
}

namespace {

bool holds_in(const Literal& lit, const PartialInterpretation& i) {
    return lit.negated ? i.neg.count(lit.atom) > 0
                       : i.pos.count(lit.atom) > 0;
}

bool contradicted_by(const Literal& lit, const PartialInterpretation& i) {
    return lit.negated ? i.pos.count(lit.atom) > 0
                       : i.neg.count(lit.atom) > 0;
}

}  // namespace

std::set<Atom> tp(const DatalogProgram& p, const PartialInterpretation& i) {
    std::set<Atom> out;
    for (const DatalogRule& r : p.rules()) {
        bool fires = true;
        for (const Literal& lit : r.body)
            if (!holds_in(lit, i)) {
                fires = false;
                break;
            }
        if (fires) out.insert(r.head);
    }
    return out;
}

std::set<Atom> potentially_founded(const DatalogProgram& p,
                                   const PartialInterpretation& i) {
    std::set<Atom> founded;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const DatalogRule& r : p.rules()) {
            if (founded.count(r.head)) continue;
            bool ok = true;
            for (const Literal& lit : r.body) {
                if (contradicted_by(lit, i) ||
                    (!lit.negated && !founded.count(lit.atom))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                founded.insert(r.head);
                grew = true;
            }
        }
    }
    return founded;
}

std::set<Atom> unfounded(const DatalogProgram& p,
                         const PartialInterpretation& i) {
    std::set<Atom> founded = potentially_founded(p, i);
    std::set<Atom> out;
    for (const Atom& a : p.herbrand_base()->atoms())
        if (!founded.count(a)) out.insert(a);
    return out;
}

PartialInterpretation wfs_step(const DatalogProgram& p,
                               const PartialInterpretation& i) {
    return PartialInterpretation{tp(p, i), unfounded(p, i)};
}

PartialInterpretation well_founded(const DatalogProgram& p) {
    PartialInterpretation i;
    while (true) {
        PartialInterpretation next = wfs_step(p, i);
        if (next == i) return i;
        i = std::move(next);
    }
}

PartialInterpretation kk_step(const DatalogProgram& p,
                              const PartialInterpretation& v) {
    PartialInterpretation out;
    for (const Atom& a : p.herbrand_base()->atoms()) {
        const auto& indices = p.rules_for(a);
        if (indices.empty()) continue;
        bool some_true = false;
        bool all_false = true;
        for (std::size_t idx : indices) {
            const DatalogRule& r = p.rules()[idx];
            bool body_true = true;
            bool body_false = false;
            for (const Literal& lit : r.body) {
                if (!holds_in(lit, v)) body_true = false;
                if (contradicted_by(lit, v)) body_false = true;
            }
            if (body_true) some_true = true;
            if (!body_false) all_false = false;
        }
        if (some_true)
            out.pos.insert(a);
        else if (all_false)
            out.neg.insert(a);
    }
    return out;
}

PartialInterpretation kripke_kleene(const DatalogProgram& p) {
    PartialInterpretation v;
    while (true) {
        PartialInterpretation next = kk_step(p, v);
        if (next == v) return v;
        v = std::move(next);
    }
}

Interpretation to_three_valued(const PartialInterpretation& i,
                               HerbrandBasePtr hb) {
    for (const Atom& a : i.pos)
        if (i.neg.count(a))
            throw StructureError("atom " + a.to_string() +
                                 " is both true and false");
    Interpretation out(std::move(hb), Bilattice::four());
    for (const Atom& a : i.pos) out.set(a, Value::four(FourTag::True));
    for (const Atom& a : i.neg) out.set(a, Value::four(FourTag::False));
    return out;
}

PartialInterpretation to_partial(const Interpretation& i) {
    if (!(*i.bilattice() == *Bilattice::four()))
        throw StructureError(
            "only four-valued interpretations embed into partial ones");
    PartialInterpretation out;
    for (const auto& [a, v] : i.defined()) {
        if (v == Value::four(FourTag::True))
            out.pos.insert(a);
        else if (v == Value::four(FourTag::False))
            out.neg.insert(a);
        else
            throw StructureError("atom " + a.to_string() +
                                 " carries the value Over, which has no "
                                 "partial counterpart");
    }
    return out;
}

}  // namespace fitlat
