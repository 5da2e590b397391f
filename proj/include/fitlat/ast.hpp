#ifndef FITLAT_AST_HPP
#define FITLAT_AST_HPP

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fitlat/bilattice.hpp"

namespace fitlat {

/// A term is a constant (lowercase identifier) or a variable (uppercase
/// identifier). There are no function symbols.
struct Term {
    enum class Kind : std::uint8_t { Constant, Variable };
    Kind kind;
    std::string name;

    static Term constant(std::string n) {
        return {Kind::Constant, std::move(n)};
    }
    static Term variable(std::string n) {
        return {Kind::Variable, std::move(n)};
    }
    bool is_variable() const { return kind == Kind::Variable; }

    auto operator<=>(const Term&) const = default;
};

/// Predicate applied to terms. Ground when no argument is a variable.
struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool is_ground() const;
    std::string to_string() const;

    auto operator<=>(const Atom&) const = default;
};

enum class BinOp : std::uint8_t { Meet, Join, Consensus, Gullibility };
enum class Quant : std::uint8_t { Exists, Forall };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Atom or negated atom; negation never applies to anything larger.
struct Literal {
    bool negated;
    Atom atom;
};

struct BinaryNode {
    BinOp op;
    FormulaPtr lhs;
    FormulaPtr rhs;
};

struct QuantNode {
    Quant quant;
    std::string var;
    FormulaPtr body;
};

/// Rule body formula. Immutable; shared freely.
struct Formula {
    std::variant<Literal, Value, BinaryNode, QuantNode> node;

    static FormulaPtr literal(bool negated, Atom a);
    static FormulaPtr constant(Value v);
    static FormulaPtr binary(BinOp op, FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr quantified(Quant q, std::string var, FormulaPtr body);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);
/// Free variables (not bound by a quantifier), in first-occurrence order.
std::vector<std::string> free_variables(const FormulaPtr& f);
/// Replaces free occurrences of variables by constants. Quantifiers
/// shadow: a binding for the quantified name does not reach its body.
FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, std::string>& binding);

std::string to_string(const FormulaPtr& f, const Bilattice& b);

/// One rule: head atom, body formula. Parsed clauses satisfy: every free
/// variable of the body occurs in the head.
struct Clause {
    Atom head;
    FormulaPtr body;
};

/// A parsed program: fact valuation plus rules, with the constants of both
/// registered as the Herbrand universe. Rules whose heads are identical up
/// to variable renaming have been merged into one clause (bodies joined
/// by |); grounding completes the one-clause-per-atom normal form.
struct Program {
    BilatticePtr bilattice;
    std::map<Atom, Value> facts;
    std::vector<Clause> rules;
    std::set<std::string> constants;

    std::string to_string() const;
};

}  // namespace fitlat

#endif
