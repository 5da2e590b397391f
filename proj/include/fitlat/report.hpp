#pragma once

#include <set>
#include <string>

#include "fitlat/interpretation.hpp"

namespace fitlat {

/// Sorted `atom = value` lines, one per defined atom, each ending in a
/// newline. The empty interpretation renders as the empty string.
std::string render_table(const Interpretation& i);

/// Sorted `{a, b(c), ...}` listing of an atom set.
std::string render_atom_set(const std::set<Atom>& atoms);

}  // namespace fitlat
