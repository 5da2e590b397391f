#ifndef FITLAT_PARSER_HPP
#define FITLAT_PARSER_HPP

#include <string_view>

#include "fitlat/ast.hpp"
#include "fitlat/interpretation.hpp"

namespace fitlat {

/// Parses program text:
///
///   fact  := atom "=" value "."
///   rule  := atom "<-" formula "."
///   formula := atom | "~" atom | value | "(" formula ")"
///            | formula "&" formula | formula "|" formula
///            | formula "(+)" formula | formula "(*)" formula
///            | ("exists" | "forall") VARIABLE formula
///
/// "%" starts a comment. Binding order, tightest first: ~, &, |, (*), (+);
/// quantifier bodies extend as far right as possible, so a quantifier used
/// as an operand must be parenthesized. Constants are lowercase
/// identifiers, variables uppercase. Value literals follow the configured
/// bilattice: T F U O, <belief,doubt>, or [lo,hi].
///
/// Raises ParseError (with position) for syntax problems, function
/// symbols, non-ground facts, body variables not bound by the head or a
/// quantifier, and conflicting duplicate facts.
Program parse_program(std::string_view text, BilatticePtr bilattice);

/// Parses a hypothesis file: fact lines only. Atoms must be ground and lie
/// inside the base; duplicates must agree.
Interpretation parse_hypothesis(std::string_view text, HerbrandBasePtr hb,
                                BilatticePtr bilattice);

}  // namespace fitlat

#endif
