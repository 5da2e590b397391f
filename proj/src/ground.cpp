#include "fitlat/ground.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fitlat/errors.hpp"

namespace fitlat {

GroundProgram::GroundProgram(BilatticePtr bilattice, HerbrandBasePtr hb,
                             std::map<Atom, FormulaPtr> rule_clauses,
                             Interpretation facts)
    : bilattice_(std::move(bilattice)),
      hb_(std::move(hb)),
      rule_clauses_(std::move(rule_clauses)),
      facts_(std::move(facts)) {}

std::set<Atom> GroundProgram::heads() const {
    std::set<Atom> out;
    for (const auto& [head, body] : rule_clauses_) out.insert(head);
    for (const Atom& a : facts_.defined_atoms()) out.insert(a);
    return out;
}

FormulaPtr GroundProgram::clause(const Atom& head) const {
    auto it = rule_clauses_.find(head);
    if (it != rule_clauses_.end()) {
        // A fact layer entry on a rule head merges in as the first
        // disjunct, keeping the one-clause-per-head normal form.
        if (facts_.defines(head))
            return Formula::binary(BinOp::Join,
                                   Formula::constant(facts_.value(head)),
                                   it->second);
        return it->second;
    }
    if (facts_.defines(head)) return Formula::constant(facts_.value(head));
    return nullptr;
}

std::map<Atom, FormulaPtr> GroundProgram::clauses() const {
    std::map<Atom, FormulaPtr> out = rule_clauses_;
    for (const Atom& a : facts_.defined_atoms()) {
        auto it = out.find(a);
        if (it == out.end())
            out.emplace(a, Formula::constant(facts_.value(a)));
        else
            it->second = Formula::binary(BinOp::Join,
                                         Formula::constant(facts_.value(a)),
                                         it->second);
    }
    return out;
}

GroundProgram GroundProgram::with_facts(Interpretation facts) const {
    return GroundProgram(bilattice_, hb_, rule_clauses_, std::move(facts));
}

Program GroundProgram::to_program() const {
    Program p;
    p.bilattice = bilattice_;
    for (const std::string& c : hb_->constants()) p.constants.insert(c);
    for (const Atom& a : facts_.defined_atoms())
        if (!rule_clauses_.count(a)) p.facts[a] = facts_.value(a);
    for (const auto& [head, body] : rule_clauses_)
        p.rules.push_back(Clause{head, body});
    return p;
}

bool GroundProgram::operator==(const GroundProgram& other) const {
    if (!(*bilattice_ == *other.bilattice_)) return false;
    if (!(*hb_ == *other.hb_)) return false;
    if (!(facts_ == other.facts_)) return false;
    if (rule_clauses_.size() != other.rule_clauses_.size()) return false;
    for (const auto& [head, body] : rule_clauses_) {
        auto it = other.rule_clauses_.find(head);
        if (it == other.rule_clauses_.end()) return false;
        if (!equal(body, it->second)) return false;
    }
    return true;
}

namespace {

void add_predicate(std::map<std::string, std::size_t>& predicates,
                   const Atom& atom) {
    auto [it, fresh] = predicates.emplace(atom.predicate, atom.args.size());
    if (!fresh && it->second != atom.args.size())
        throw GroundError("predicate '" + atom.predicate +
                          "' is used with arities " +
                          std::to_string(it->second) + " and " +
                          std::to_string(atom.args.size()));
}

void collect_predicates(const FormulaPtr& f,
                        std::map<std::string, std::size_t>& predicates) {
    if (const auto* lit = std::get_if<Literal>(&f->node)) {
        add_predicate(predicates, lit->atom);
        return;
    }
    if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
        collect_predicates(bin->lhs, predicates);
        collect_predicates(bin->rhs, predicates);
        return;
    }
    if (const auto* q = std::get_if<QuantNode>(&f->node))
        collect_predicates(q->body, predicates);
}

// Replaces each quantifier by a |/& chain over the universe, innermost
// occurrences included (substitute respects shadowing, so nested binders
// of the same name expand independently).
FormulaPtr expand_quantifiers(const FormulaPtr& f,
                              const std::vector<std::string>& universe) {
    if (std::holds_alternative<Literal>(f->node) ||
        std::holds_alternative<Value>(f->node))
        return f;
    if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
        FormulaPtr lhs = expand_quantifiers(bin->lhs, universe);
        FormulaPtr rhs = expand_quantifiers(bin->rhs, universe);
        if (lhs == bin->lhs && rhs == bin->rhs) return f;
        return Formula::binary(bin->op, std::move(lhs), std::move(rhs));
    }
    const auto& q = std::get<QuantNode>(f->node);
    if (universe.empty())
        throw GroundError("cannot ground a quantifier over an empty universe");
    BinOp op = q.quant == Quant::Exists ? BinOp::Join : BinOp::Meet;
    FormulaPtr chain;
    for (const std::string& c : universe) {
        FormulaPtr inst = expand_quantifiers(
            substitute(q.body, {{q.var, c}}), universe);
        chain = chain ? Formula::binary(op, std::move(chain), std::move(inst))
                      : std::move(inst);
    }
    return chain;
}

}  // namespace

GroundProgram ground(const Program& program) {
    if (!program.bilattice)
        throw GroundError("program carries no bilattice");

    std::map<std::string, std::size_t> predicates;
    for (const auto& [atom, value] : program.facts)
        add_predicate(predicates, atom);
    for (const Clause& c : program.rules) {
        add_predicate(predicates, c.head);
        collect_predicates(c.body, predicates);
    }

    auto hb = std::make_shared<const HerbrandBase>(predicates,
                                                   program.constants);
    std::vector<std::string> universe = hb->constants();

    Interpretation facts(hb, program.bilattice);
    for (const auto& [atom, value] : program.facts) facts.set(atom, value);

    std::map<Atom, FormulaPtr> rule_clauses;
    std::vector<Atom> head_order;
    for (const Clause& c : program.rules) {
        std::vector<std::string> vars;
        for (const Term& t : c.head.args)
            if (t.is_variable() &&
                std::find(vars.begin(), vars.end(), t.name) == vars.end())
                vars.push_back(t.name);

        // Odometer over the universe, lexicographic in head-variable order.
        std::vector<std::size_t> idx(vars.size(), 0);
        bool done = vars.empty() ? false : universe.empty();
        while (!done) {
            std::map<std::string, std::string> binding;
            for (std::size_t i = 0; i < vars.size(); ++i)
                binding[vars[i]] = universe[idx[i]];

            Atom head = c.head;
            for (Term& t : head.args)
                if (t.is_variable()) t = Term::constant(binding.at(t.name));
            FormulaPtr body =
                expand_quantifiers(substitute(c.body, binding), universe);

            auto it = rule_clauses.find(head);
            if (it == rule_clauses.end()) {
                rule_clauses.emplace(std::move(head), std::move(body));
            } else {
                it->second = Formula::binary(BinOp::Join, it->second,
                                             std::move(body));
            }

            if (vars.empty()) break;
            std::size_t pos = vars.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < universe.size()) break;
                idx[pos] = 0;
                if (pos == 0) done = true;
            }
        }
    }

    // A fact whose atom heads a rule merges into that clause as its first
    // disjunct and leaves the fact layer: the single-clause normal form
    // makes the value part of the rule, so the program's fact function is
    // carved from constant-bodied clauses alone.
    for (const auto& [atom, value] : program.facts) {
        auto it = rule_clauses.find(atom);
        if (it != rule_clauses.end()) {
            it->second = Formula::binary(BinOp::Join,
                                         Formula::constant(value), it->second);
            facts.set(atom, program.bilattice->bot_k());
        }
    }

    return GroundProgram(program.bilattice, hb, std::move(rule_clauses),
                         std::move(facts));
}

namespace {

bool is_negation_body(const FormulaPtr& f, const Bilattice& b) {
    if (std::holds_alternative<Literal>(f->node)) return true;
    if (const auto* v = std::get_if<Value>(&f->node)) return *v == b.top_t();
    if (const auto* bin = std::get_if<BinaryNode>(&f->node))
        return (bin->op == BinOp::Meet || bin->op == BinOp::Join) &&
               is_negation_body(bin->lhs, b) && is_negation_body(bin->rhs, b);
    return false;
}

}  // namespace

bool is_datalog_neg(const GroundProgram& g) {
    const Bilattice& b = *g.bilattice();
    if (!(b == *Bilattice::four())) return false;
    for (const Atom& a : g.facts().defined_atoms())
        if (!(g.facts().value(a) == b.top_t())) return false;
    for (const auto& [head, body] : g.rule_clauses())
        if (!is_negation_body(body, b)) return false;
    return true;
}

}  // namespace fitlat
