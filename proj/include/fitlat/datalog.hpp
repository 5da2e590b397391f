#pragma once

#include <set>
#include <vector>

#include "fitlat/ground.hpp"

namespace fitlat {

/// A consistent partial two-valued interpretation: atoms known true and
/// atoms known false; everything else is unknown.
struct PartialInterpretation {
    std::set<Atom> pos;
    std::set<Atom> neg;

    bool operator==(const PartialInterpretation&) const = default;
};

/// One rule with a conjunctive body of literals. An empty body is a fact.
struct DatalogRule {
    Atom head;
    std::vector<Literal> body;
};

/// A ground normal logic program: plain rules, one per disjunct, several
/// per head allowed.
class DatalogProgram {
  public:
    DatalogProgram(HerbrandBasePtr hb, std::vector<DatalogRule> rules);

    const HerbrandBasePtr& herbrand_base() const { return hb_; }
    const std::vector<DatalogRule>& rules() const { return rules_; }
    /// Indices into rules() for every rule heading `a`.
    const std::vector<std::size_t>& rules_for(const Atom& a) const;

  private:
    HerbrandBasePtr hb_;
    std::vector<DatalogRule> rules_;
    std::map<Atom, std::vector<std::size_t>> by_head_;
    std::vector<std::size_t> none_;
};

/// Splits a ground program in the negation fragment (see is_datalog_neg)
/// into plain rules by distributing each clause body into its disjuncts.
/// Throws FragmentError outside the fragment.
DatalogProgram to_datalog(const GroundProgram& g);

/// Heads of rules whose body literals all hold in `i`.
std::set<Atom> tp(const DatalogProgram& p, const PartialInterpretation& i);

/// Least set closed under: a rule founds its head when no body literal is
/// contradicted by `i` and every positive body atom is already founded.
std::set<Atom> potentially_founded(const DatalogProgram& p,
                                   const PartialInterpretation& i);

/// Complement of potentially_founded in the Herbrand base.
std::set<Atom> unfounded(const DatalogProgram& p,
                         const PartialInterpretation& i);

/// One well-founded step: derived atoms turn true, unfounded atoms false.
PartialInterpretation wfs_step(const DatalogProgram& p,
                               const PartialInterpretation& i);

/// Least fixpoint of wfs_step from the empty interpretation.
PartialInterpretation well_founded(const DatalogProgram& p);

/// One three-valued consequence step: an atom turns true when some rule
/// body is true, false when it has rules and every body is false, and
/// stays unknown otherwise (in particular when it heads no rule).
PartialInterpretation kk_step(const DatalogProgram& p,
                              const PartialInterpretation& v);

/// Least fixpoint of kk_step from the all-unknown interpretation.
PartialInterpretation kripke_kleene(const DatalogProgram& p);

/// Embeds pos as True and neg as False over the FOUR bilattice; unknown
/// atoms stay Under. Throws StructureError when pos and neg overlap.
Interpretation to_three_valued(const PartialInterpretation& i,
                               HerbrandBasePtr hb);

/// Inverse embedding: True atoms to pos, False atoms to neg. Throws
/// StructureError off the FOUR bilattice or on an Over value.
PartialInterpretation to_partial(const Interpretation& i);

}  // namespace fitlat
