#include "fitlat/ast.hpp"

#include <algorithm>

namespace fitlat {

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(),
                        [](const Term& t) { return t.is_variable(); });
}

std::string Atom::to_string() const {
    if (args.empty()) return predicate;
    std::string out = predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i].name;
    }
    return out + ")";
}

FormulaPtr Formula::literal(bool negated, Atom a) {
    return std::make_shared<Formula>(Formula{Literal{negated, std::move(a)}});
}

FormulaPtr Formula::constant(Value v) {
    return std::make_shared<Formula>(Formula{std::move(v)});
}

FormulaPtr Formula::binary(BinOp op, FormulaPtr lhs, FormulaPtr rhs) {
    return std::make_shared<Formula>(
        Formula{BinaryNode{op, std::move(lhs), std::move(rhs)}});
}

FormulaPtr Formula::quantified(Quant q, std::string var, FormulaPtr body) {
    return std::make_shared<Formula>(
        Formula{QuantNode{q, std::move(var), std::move(body)}});
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node.index() != b->node.index()) return false;
    if (const auto* la = std::get_if<Literal>(&a->node)) {
        const auto& lb = std::get<Literal>(b->node);
        return la->negated == lb.negated && la->atom == lb.atom;
    }
    if (const auto* va = std::get_if<Value>(&a->node))
        return *va == std::get<Value>(b->node);
    if (const auto* ba = std::get_if<BinaryNode>(&a->node)) {
        const auto& bb = std::get<BinaryNode>(b->node);
        return ba->op == bb.op && equal(ba->lhs, bb.lhs) &&
               equal(ba->rhs, bb.rhs);
    }
    const auto& qa = std::get<QuantNode>(a->node);
    const auto& qb = std::get<QuantNode>(b->node);
    return qa.quant == qb.quant && qa.var == qb.var && equal(qa.body, qb.body);
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::vector<std::string>& out,
                  std::set<std::string>& seen) {
    if (const auto* lit = std::get_if<Literal>(&f->node)) {
        for (const Term& t : lit->atom.args)
            if (t.is_variable() && !bound.count(t.name) && !seen.count(t.name)) {
                seen.insert(t.name);
                out.push_back(t.name);
            }
        return;
    }
    if (std::holds_alternative<Value>(f->node)) return;
    if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
        collect_free(bin->lhs, bound, out, seen);
        collect_free(bin->rhs, bound, out, seen);
        return;
    }
    const auto& q = std::get<QuantNode>(f->node);
    bool was_bound = bound.count(q.var) > 0;
    bound.insert(q.var);
    collect_free(q.body, bound, out, seen);
    if (!was_bound) bound.erase(q.var);
}

}  // namespace

std::vector<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> bound, seen;
    std::vector<std::string> out;
    collect_free(f, bound, out, seen);
    return out;
}

FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, std::string>& binding) {
    if (binding.empty()) return f;
    if (const auto* lit = std::get_if<Literal>(&f->node)) {
        bool changed = false;
        Atom atom = lit->atom;
        for (Term& t : atom.args) {
            if (!t.is_variable()) continue;
            auto it = binding.find(t.name);
            if (it == binding.end()) continue;
            t = Term::constant(it->second);
            changed = true;
        }
        if (!changed) return f;
        return Formula::literal(lit->negated, std::move(atom));
    }
    if (std::holds_alternative<Value>(f->node)) return f;
    if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
        FormulaPtr lhs = substitute(bin->lhs, binding);
        FormulaPtr rhs = substitute(bin->rhs, binding);
        if (lhs == bin->lhs && rhs == bin->rhs) return f;
        return Formula::binary(bin->op, std::move(lhs), std::move(rhs));
    }
    const auto& q = std::get<QuantNode>(f->node);
    if (binding.count(q.var)) {
        // The quantifier shadows this name; drop it for the subtree.
        std::map<std::string, std::string> inner = binding;
        inner.erase(q.var);
        FormulaPtr body = substitute(q.body, inner);
        if (body == q.body) return f;
        return Formula::quantified(q.quant, q.var, std::move(body));
    }
    FormulaPtr body = substitute(q.body, binding);
    if (body == q.body) return f;
    return Formula::quantified(q.quant, q.var, std::move(body));
}

namespace {

// Higher binds tighter. Quantifiers are weakest, so their bodies stretch
// as far right as possible.
int precedence(const Formula& f) {
    if (const auto* bin = std::get_if<BinaryNode>(&f.node)) {
        switch (bin->op) {
            case BinOp::Gullibility:
                return 1;
            case BinOp::Consensus:
                return 2;
            case BinOp::Join:
                return 3;
            case BinOp::Meet:
                return 4;
        }
    }
    if (std::holds_alternative<QuantNode>(f.node)) return 0;
    return 5;
}

const char* op_token(BinOp op) {
    switch (op) {
        case BinOp::Meet:
            return " & ";
        case BinOp::Join:
            return " | ";
        case BinOp::Consensus:
            return " (*) ";
        case BinOp::Gullibility:
            return " (+) ";
    }
    return " ? ";
}

void print(const FormulaPtr& f, const Bilattice& b, std::string& out) {
    if (const auto* lit = std::get_if<Literal>(&f->node)) {
        if (lit->negated) out += "~";
        out += lit->atom.to_string();
        return;
    }
    if (const auto* v = std::get_if<Value>(&f->node)) {
        out += b.print(*v);
        return;
    }
    if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
        int prec = precedence(*f);
        bool lp = precedence(*bin->lhs) < prec;
        bool rp = precedence(*bin->rhs) <= prec;
        if (lp) out += "(";
        print(bin->lhs, b, out);
        if (lp) out += ")";
        out += op_token(bin->op);
        if (rp) out += "(";
        print(bin->rhs, b, out);
        if (rp) out += ")";
        return;
    }
    const auto& q = std::get<QuantNode>(f->node);
    out += q.quant == Quant::Exists ? "exists " : "forall ";
    out += q.var;
    out += " ";
    print(q.body, b, out);
}

}  // namespace

std::string to_string(const FormulaPtr& f, const Bilattice& b) {
    std::string out;
    print(f, b, out);
    return out;
}

std::string Program::to_string() const {
    std::string out;
    for (const auto& [atom, value] : facts) {
        out += atom.to_string();
        out += " = ";
        out += bilattice->print(value);
        out += ".\n";
    }
    for (const Clause& c : rules) {
        out += c.head.to_string();
        out += " <- ";
        out += fitlat::to_string(c.body, *bilattice);
        out += ".\n";
    }
    return out;
}

}  // namespace fitlat
