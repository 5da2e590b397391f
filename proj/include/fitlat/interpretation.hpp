#ifndef FITLAT_INTERPRETATION_HPP
#define FITLAT_INTERPRETATION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "fitlat/herbrand.hpp"

namespace fitlat {

/// A total map from the Herbrand base into the bilattice, stored sparsely:
/// atoms absent from the map hold the knowledge bottom (Under). Immutable
/// style: operations return new interpretations.
class Interpretation {
  public:
    Interpretation(HerbrandBasePtr hb, BilatticePtr bilattice);

    static Interpretation from_pairs(
        HerbrandBasePtr hb, BilatticePtr bilattice,
        const std::vector<std::pair<Atom, Value>>& pairs);

    const HerbrandBasePtr& herbrand_base() const { return hb_; }
    const BilatticePtr& bilattice() const { return bilattice_; }

    /// Value of a ground atom; Under when the atom is not defined.
    Value value(const Atom& a) const;
    /// Sets the value; assigning Under removes the entry. The atom must
    /// belong to the Herbrand base and the value to the carrier.
    void set(const Atom& a, const Value& v);

    bool defines(const Atom& a) const { return defined_.count(a) > 0; }
    const std::map<Atom, Value>& defined() const { return defined_; }
    std::set<Atom> defined_atoms() const;

    /// Part-of: every atom this interpretation defines has the same value
    /// in other. Orders interpretations by information growth without
    /// value revision.
    bool is_part_of(const Interpretation& other) const;
    /// True when no atom is defined to different values on the two sides.
    bool compatible_with(const Interpretation& other) const;

    /// Keeps only atoms inside the given set.
    Interpretation restrict_to(const std::set<Atom>& atoms) const;

    // Pointwise bilattice operations over the whole base.
    Interpretation knowledge_join(const Interpretation& other) const;
    Interpretation knowledge_meet(const Interpretation& other) const;
    Interpretation truth_meet(const Interpretation& other) const;
    Interpretation truth_join(const Interpretation& other) const;
    Interpretation negate_pointwise() const;

    /// Every undefined atom raised to the knowledge top.
    Interpretation saturate() const;

    bool operator==(const Interpretation& other) const;

  private:
    void check_same_space(const Interpretation& other) const;
    Interpretation pointwise(const Interpretation& other, int op) const;

    HerbrandBasePtr hb_;
    BilatticePtr bilattice_;
    std::map<Atom, Value> defined_;
};

/// Evaluates a closed formula under an interpretation. Quantifiers range
/// over the universe of the interpretation's Herbrand base; a quantifier
/// over an empty universe and a free variable both raise EvalError.
Value eval(const Interpretation& i, const FormulaPtr& formula);

/// The robust value of a formula: defined exactly when every extension of
/// i (in the part-of order) evaluates the formula to one same value, which
/// coincides with agreement between i and its saturation.
std::optional<Value> robust_value(const Interpretation& i,
                                  const FormulaPtr& formula);

}  // namespace fitlat

#endif
