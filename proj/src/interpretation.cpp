#include "fitlat/interpretation.hpp"

#include "fitlat/errors.hpp"

namespace fitlat {

Interpretation::Interpretation(HerbrandBasePtr hb, BilatticePtr bilattice)
    : hb_(std::move(hb)), bilattice_(std::move(bilattice)) {
    if (!hb_ || !bilattice_)
        throw StructureError("interpretation needs a Herbrand base and a "
                             "bilattice");
}

Interpretation Interpretation::from_pairs(
    HerbrandBasePtr hb, BilatticePtr bilattice,
    const std::vector<std::pair<Atom, Value>>& pairs) {
    Interpretation i(std::move(hb), std::move(bilattice));
    for (const auto& [atom, value] : pairs) {
        if (i.defines(atom) && !(i.value(atom) == value))
            throw StructureError("conflicting values for atom " +
                                 atom.to_string());
        i.set(atom, value);
    }
    return i;
}

Value Interpretation::value(const Atom& a) const {
    auto it = defined_.find(a);
    if (it != defined_.end()) return it->second;
    return bilattice_->bot_k();
}

void Interpretation::set(const Atom& a, const Value& v) {
    if (!hb_->contains(a))
        throw StructureError("atom " + a.to_string() +
                             " is outside the Herbrand base");
    bilattice_->check(v);
    if (v == bilattice_->bot_k()) {
        defined_.erase(a);
        return;
    }
    defined_[a] = v;
}

std::set<Atom> Interpretation::defined_atoms() const {
    std::set<Atom> out;
    for (const auto& [atom, value] : defined_) out.insert(atom);
    return out;
}

void Interpretation::check_same_space(const Interpretation& other) const {
    if (bilattice_ != other.bilattice_ && !(*bilattice_ == *other.bilattice_))
        throw StructureError("interpretations over different bilattices");
    if (hb_ != other.hb_ && !(*hb_ == *other.hb_))
        throw StructureError("interpretations over different Herbrand bases");
}

bool Interpretation::is_part_of(const Interpretation& other) const {
    check_same_space(other);
    for (const auto& [atom, value] : defined_)
        if (!(other.value(atom) == value)) return false;
    return true;
}

bool Interpretation::compatible_with(const Interpretation& other) const {
    check_same_space(other);
    for (const auto& [atom, value] : defined_) {
        auto it = other.defined_.find(atom);
        if (it != other.defined_.end() && !(it->second == value)) return false;
    }
    return true;
}

Interpretation Interpretation::restrict_to(const std::set<Atom>& atoms) const {
    Interpretation out(hb_, bilattice_);
    for (const auto& [atom, value] : defined_)
        if (atoms.count(atom)) out.defined_[atom] = value;
    return out;
}

// op: 0 knowledge_join, 1 knowledge_meet, 2 truth_meet, 3 truth_join.
// Every operation maps (Under, Under) to Under, so iterating the union of
// the defined entries is a total computation.
Interpretation Interpretation::pointwise(const Interpretation& other,
                                         int op) const {
    check_same_space(other);
    Interpretation out(hb_, bilattice_);
    auto apply = [&](const Atom& atom) {
        Value l = value(atom);
        Value r = other.value(atom);
        Value v;
        switch (op) {
            case 0:
                v = bilattice_->gullibility(l, r);
                break;
            case 1:
                v = bilattice_->consensus(l, r);
                break;
            case 2:
                v = bilattice_->meet_t(l, r);
                break;
            default:
                v = bilattice_->join_t(l, r);
                break;
        }
        out.set(atom, v);
    };
    for (const auto& [atom, value] : defined_) apply(atom);
    for (const auto& [atom, value] : other.defined_)
        if (!defines(atom)) apply(atom);
    return out;
}

Interpretation Interpretation::knowledge_join(
    const Interpretation& other) const {
    return pointwise(other, 0);
}

Interpretation Interpretation::knowledge_meet(
    const Interpretation& other) const {
    return pointwise(other, 1);
}

Interpretation Interpretation::truth_meet(const Interpretation& other) const {
    return pointwise(other, 2);
}

Interpretation Interpretation::truth_join(const Interpretation& other) const {
    return pointwise(other, 3);
}

Interpretation Interpretation::negate_pointwise() const {
    // Negation fixes the knowledge bottom, so undefined atoms stay put.
    Interpretation out(hb_, bilattice_);
    for (const auto& [atom, value] : defined_)
        out.set(atom, bilattice_->negate(value));
    return out;
}

Interpretation Interpretation::saturate() const {
    Interpretation out(hb_, bilattice_);
    Value top = bilattice_->top_k();
    for (const Atom& atom : hb_->atoms())
        out.set(atom, defines(atom) ? value(atom) : top);
    return out;
}

bool Interpretation::operator==(const Interpretation& other) const {
    check_same_space(other);
    return defined_ == other.defined_;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// default_value substitutes for undefined atoms: the knowledge bottom for
// plain evaluation, the knowledge top for the saturated reading.
Value eval_impl(const Interpretation& i, const FormulaPtr& f,
                std::map<std::string, std::string>& env,
                const Value& default_value) {
    const Bilattice& b = *i.bilattice();
    if (const auto* lit = std::get_if<Literal>(&f->node)) {
        auto lookup = [&](const Atom& atom) {
            if (!i.herbrand_base()->contains(atom))
                throw StructureError("atom " + atom.to_string() +
                                     " is outside the Herbrand base");
            Value v = i.defines(atom) ? i.value(atom) : default_value;
            return lit->negated ? b.negate(v) : v;
        };
        if (lit->atom.is_ground()) return lookup(lit->atom);
        Atom atom = lit->atom;
        for (Term& t : atom.args) {
            if (!t.is_variable()) continue;
            auto it = env.find(t.name);
            if (it == env.end())
                throw EvalError("free variable '" + t.name +
                                "' in formula evaluation");
            t = Term::constant(it->second);
        }
        return lookup(atom);
    }
    if (const auto* v = std::get_if<Value>(&f->node)) {
        b.check(*v);
        return *v;
    }
    if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
        Value l = eval_impl(i, bin->lhs, env, default_value);
        Value r = eval_impl(i, bin->rhs, env, default_value);
        switch (bin->op) {
            case BinOp::Meet:
                return b.meet_t(l, r);
            case BinOp::Join:
                return b.join_t(l, r);
            case BinOp::Consensus:
                return b.consensus(l, r);
            case BinOp::Gullibility:
                return b.gullibility(l, r);
        }
    }
    const auto& q = std::get<QuantNode>(f->node);
    const auto& constants = i.herbrand_base()->constants();
    if (constants.empty())
        throw EvalError("quantifier over an empty universe");
    auto saved = env.find(q.var);
    std::string saved_value;
    bool had = saved != env.end();
    if (had) saved_value = saved->second;
    std::optional<Value> acc;
    for (const std::string& c : constants) {
        env[q.var] = c;
        Value v = eval_impl(i, q.body, env, default_value);
        if (!acc)
            acc = v;
        else
            acc = q.quant == Quant::Exists ? b.join_t(*acc, v)
                                           : b.meet_t(*acc, v);
    }
    if (had)
        env[q.var] = saved_value;
    else
        env.erase(q.var);
    return *acc;
}

}  // namespace

Value eval(const Interpretation& i, const FormulaPtr& formula) {
    std::map<std::string, std::string> env;
    return eval_impl(i, formula, env, i.bilattice()->bot_k());
}

std::optional<Value> robust_value(const Interpretation& i,
                                  const FormulaPtr& formula) {
    std::map<std::string, std::string> env;
    Value plain = eval_impl(i, formula, env, i.bilattice()->bot_k());
    Value saturated = eval_impl(i, formula, env, i.bilattice()->top_k());
    if (plain == saturated) return plain;
    return std::nullopt;
}

}  // namespace fitlat
