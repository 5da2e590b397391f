#include "fitlat/herbrand.hpp"

#include <algorithm>

namespace fitlat {

namespace {

void enumerate(const std::string& predicate, std::size_t arity,
               const std::vector<std::string>& constants,
               std::vector<Term>& prefix, std::vector<Atom>& out) {
    if (prefix.size() == arity) {
        out.push_back(Atom{predicate, prefix});
        return;
    }
    for (const std::string& c : constants) {
        prefix.push_back(Term::constant(c));
        enumerate(predicate, arity, constants, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

HerbrandBase::HerbrandBase(std::map<std::string, std::size_t> predicates,
                           std::set<std::string> constants)
    : predicates_(std::move(predicates)),
      constants_(constants.begin(), constants.end()) {
    for (const auto& [name, arity] : predicates_) {
        std::vector<Term> prefix;
        enumerate(name, arity, constants_, prefix, atoms_);
    }
    std::sort(atoms_.begin(), atoms_.end());
    atom_set_.insert(atoms_.begin(), atoms_.end());
}

}  // namespace fitlat
