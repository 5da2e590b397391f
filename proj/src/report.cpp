#include "fitlat/report.hpp"

namespace fitlat {

std::string render_table(const Interpretation& i) {
    std::string out;
    for (const auto& [atom, value] : i.defined())
        out += atom.to_string() + " = " + i.bilattice()->print(value) + "\n";
    return out;
}

std::string render_atom_set(const std::set<Atom>& atoms) {
    std::string out = "{";
    bool first = true;
    for (const Atom& a : atoms) {
        if (!first) out += ", ";
        out += a.to_string();
        first = false;
    }
    return out + "}";
}

}  // namespace fitlat
