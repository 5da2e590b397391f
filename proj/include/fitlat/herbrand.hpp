#ifndef FITLAT_HERBRAND_HPP
#define FITLAT_HERBRAND_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fitlat/ast.hpp"

namespace fitlat {

/// The Herbrand base of a program: every ground atom formed from the
/// program's predicates and constants, together with the universe itself.
/// Shared by interpretations so that base mismatches are detectable.
class HerbrandBase {
  public:
    /// predicates maps name to arity; a zero-ary predicate contributes one
    /// atom even when the universe is empty.
    HerbrandBase(std::map<std::string, std::size_t> predicates,
                 std::set<std::string> constants);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<std::string>& constants() const { return constants_; }
    const std::map<std::string, std::size_t>& predicates() const {
        return predicates_;
    }

    bool contains(const Atom& a) const { return atom_set_.count(a) > 0; }
    std::size_t size() const { return atoms_.size(); }

    bool operator==(const HerbrandBase& other) const {
        return predicates_ == other.predicates_ &&
               constants_ == other.constants_;
    }

  private:
    std::map<std::string, std::size_t> predicates_;
    std::vector<std::string> constants_;
    std::vector<Atom> atoms_;
    std::set<Atom> atom_set_;
};

using HerbrandBasePtr = std::shared_ptr<const HerbrandBase>;

}  // namespace fitlat

#endif
