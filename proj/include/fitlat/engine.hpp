#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "fitlat/ground.hpp"
#include "fitlat/interpretation.hpp"

namespace fitlat {

/// Outcome of a support computation.
struct SupportResult {
    /// Maximal part of the hypothesis backed by the program: the largest
    /// restriction of the hypothesis that is sound.
    Interpretation support;
    /// Hypothesis atoms dropped up front for contradicting a fact.
    std::set<Atom> incompatible;
    /// The potentially-falsified sets, from PF_0 = {} up to the fixpoint.
    std::vector<std::set<Atom>> pf_trace;
    /// Number of PF steps taken (pf_trace.size() - 1).
    std::size_t iterations = 0;
};

/// Outcome of the hypothesis-founded semantics fixpoint.
struct SemanticsResult {
    Interpretation model;
    /// Fact-layer stages, from the program's own facts to the fixpoint.
    std::vector<Interpretation> stage_trace;
    /// Number of steps taken (stage_trace.size() - 1).
    std::size_t iterations = 0;
};

/// One step of the consequence operator: every clause head whose body has
/// a robust value under `i` gets that value; all other atoms fall to Under.
Interpretation immediate_consequence(const GroundProgram& g,
                                     const Interpretation& i);

/// True when `i` respects every clause: whenever a clause body has a
/// robust value under `i`, the head carries exactly that value.
bool is_model(const GroundProgram& g, const Interpretation& i);

/// A hypothesis is sound when it contradicts no fact and, restricted to
/// the clause heads, is part of the consequences of facts-plus-hypothesis.
bool is_sound(const GroundProgram& g, const Interpretation& hypothesis);

/// Hypothesis atoms that contradict a fact of the program.
std::set<Atom> fact_incompatible(const GroundProgram& g,
                                 const Interpretation& hypothesis);

/// The potentially-falsified sequence: PF_0 = {}, and PF_i collects every
/// clause head whose body does not robustly take the hypothesized value
/// under facts (+) hypothesis-minus-incompatible-minus-PF_{i-1}. The
/// sequence grows monotonically and the returned trace ends at the first
/// repeat (which is the fixpoint).
std::vector<std::set<Atom>> compute_pf(const GroundProgram& g,
                                       const Interpretation& hypothesis);

/// Maximal sound part of a hypothesis, computed by iterating the
/// potentially-falsified set to its (monotone) fixpoint.
SupportResult support(const GroundProgram& g,
                      const Interpretation& hypothesis);

/// Least fixpoint of F |-> T(F) (+) support(<F,R>, H) starting from the
/// program's facts, where (+) is the knowledge join. `max_iterations` 0
/// selects the default cap of 10 * |Herbrand base| + 10; exceeding the cap
/// raises IterationLimitError carrying the last two stages.
SemanticsResult h_founded_semantics(const GroundProgram& g,
                                    const Interpretation& hypothesis,
                                    std::size_t max_iterations = 0);

}  // namespace fitlat
