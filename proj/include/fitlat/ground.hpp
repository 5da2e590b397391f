#pragma once

#include <map>
#include <set>

#include "fitlat/ast.hpp"
#include "fitlat/herbrand.hpp"
#include "fitlat/interpretation.hpp"

namespace fitlat {

/// A ground program in clause normal form: at most one clause per ground
/// atom. Rule-derived clauses are kept apart from the fact layer so the
/// fact layer can be swapped (see with_facts) without touching the rules.
///
/// A fact atom that also heads a rule has its value folded into that rule
/// clause as the first |-disjunct when the program is grounded; the clause
/// then stays fixed even when the fact layer is replaced later.
class GroundProgram {
  public:
    GroundProgram(BilatticePtr bilattice, HerbrandBasePtr hb,
                  std::map<Atom, FormulaPtr> rule_clauses,
                  Interpretation facts);

    const BilatticePtr& bilattice() const { return bilattice_; }
    const HerbrandBasePtr& herbrand_base() const { return hb_; }
    const std::map<Atom, FormulaPtr>& rule_clauses() const {
        return rule_clauses_;
    }
    const Interpretation& facts() const { return facts_; }

    /// Atoms heading any clause: rule heads plus fact atoms.
    std::set<Atom> heads() const;

    /// The clause body for `head`, or nullptr when no clause defines it.
    /// A fact atom that heads no rule contributes the constant clause
    /// `head <- value`.
    FormulaPtr clause(const Atom& head) const;

    /// All clauses, keyed by head atom.
    std::map<Atom, FormulaPtr> clauses() const;

    /// The same rules over a different fact layer. Rule clauses are reused
    /// verbatim; only atoms outside the rule heads pick up fact clauses
    /// from the new layer.
    GroundProgram with_facts(Interpretation facts) const;

    /// An equivalent Program (already ground). Facts folded into rule
    /// clauses at grounding time are represented by those clauses, not
    /// re-emitted as facts.
    Program to_program() const;

    bool operator==(const GroundProgram& other) const;

  private:
    BilatticePtr bilattice_;
    HerbrandBasePtr hb_;
    std::map<Atom, FormulaPtr> rule_clauses_;
    Interpretation facts_;
};

/// Instantiates head variables over the constants of the program, expands
/// quantifiers into |/& chains over the same universe, and merges clauses
/// that share a ground head atom (in source order). Throws GroundError for
/// a quantifier over an empty universe or a predicate used with two
/// different arities.
GroundProgram ground(const Program& program);

/// True when the ground program lies in the negation fragment: the FOUR
/// bilattice, every fact T, and every clause body built from literals,
/// &, | and the constant T alone.
bool is_datalog_neg(const GroundProgram& g);

}  // namespace fitlat
