#ifndef FITLAT_BILATTICE_HPP
#define FITLAT_BILATTICE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "fitlat/decimal.hpp"

namespace fitlat {

/// The four classical truth values. True/False are the usual two; Under
/// carries no information and Over carries contradictory information.
enum class FourTag : std::uint8_t { False, True, Under, Over };

/// One truth value from whichever carrier the ambient Bilattice uses.
///
/// Four   : one of the FourTag constants.
/// Pair   : <belief, doubt>, belief from the first base lattice and doubt
///          from the second; evidence for and evidence against.
/// Interval: [lo, hi] bounds over one base lattice. Inputs always satisfy
///          lo <= hi; gullibility of disjoint intervals yields lo > hi,
///          which is kept as a value of contradictory knowledge (the
///          knowledge top is [top, bot]).
class Value {
  public:
    enum class Kind : std::uint8_t { Four, Pair, Interval };

    Value() : kind_(Kind::Four), four_(FourTag::Under) {}

    static Value four(FourTag t) { return Value(t); }
    static Value pair(Dec belief, Dec doubt) {
        return Value(Kind::Pair, std::move(belief), std::move(doubt));
    }
    static Value interval(Dec lo, Dec hi) {
        return Value(Kind::Interval, std::move(lo), std::move(hi));
    }

    Kind kind() const { return kind_; }
    bool is_four() const { return kind_ == Kind::Four; }

    FourTag four_tag() const { return four_; }
    const Dec& first() const { return a_; }   // belief / lo
    const Dec& second() const { return b_; }  // doubt / hi

    bool operator==(const Value& other) const = default;

  private:
    explicit Value(FourTag t) : kind_(Kind::Four), four_(t) {}
    Value(Kind k, Dec a, Dec b)
        : kind_(k), four_(FourTag::Under), a_(std::move(a)), b_(std::move(b)) {}

    Kind kind_;
    FourTag four_;
    Dec a_;
    Dec b_;
};

/// A base lattice for product and interval carriers. All supported bases
/// are chains, so meet and join are min and max:
///   bool      {0 < 1}
///   chainN    {0 < 1 < ... < N}
///   unit      exact decimals in [0, 1]
class BaseLattice {
  public:
    enum class Kind : std::uint8_t { Bool, Chain, Unit };

    static BaseLattice boolean() { return BaseLattice(Kind::Bool, 1); }
    static BaseLattice chain(std::int64_t n);
    static BaseLattice unit() { return BaseLattice(Kind::Unit, 1); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ != Kind::Unit; }
    std::int64_t top_int() const { return top_; }

    Dec bot() const { return Dec::from_int(0); }
    Dec top() const { return Dec::from_int(top_); }
    /// Order-reversing involution; every supported chain has one.
    Dec complement(const Dec& x) const { return x.complement_from(top_); }

    bool contains(const Dec& x) const;
    /// Parses one element literal; bool also accepts "false"/"true".
    Dec parse_element(std::string_view text) const;

    std::string name() const;
    bool operator==(const BaseLattice& other) const = default;

  private:
    BaseLattice(Kind k, std::int64_t top) : kind_(k), top_(top) {}
    Kind kind_;
    std::int64_t top_;
};

/// A bilattice: one carrier with the truth ordering and the knowledge
/// ordering, their meets and joins, and (when available) negation and
/// conflation. Construct through the factories; all Value operations check
/// that operands belong to this carrier.
class Bilattice {
  public:
    enum class Kind : std::uint8_t { Four, Product, Interval };

    static std::shared_ptr<const Bilattice> four();
    static std::shared_ptr<const Bilattice> product(BaseLattice l1,
                                                    BaseLattice l2);
    static std::shared_ptr<const Bilattice> interval(BaseLattice base);
    /// Parses a CLI-style selector: "four", "product:unit", "interval:bool",
    /// "product:chain3", "product:unit,bool", ...
    static std::shared_ptr<const Bilattice> from_selector(std::string_view s);

    Kind kind() const { return kind_; }
    const BaseLattice& base1() const { return base1_; }
    const BaseLattice& base2() const { return base2_; }

    bool is_finite() const;
    /// Negation reverses truth and preserves knowledge. The product carrier
    /// has one exactly when both bases coincide (it swaps coordinates).
    bool has_negation() const;
    /// Conflation reverses knowledge and preserves truth; same availability
    /// rule as negation.
    bool has_conflation() const;

    // Extrema: truth top/bottom and knowledge top/bottom.
    Value top_t() const;
    Value bot_t() const;
    Value top_k() const;
    Value bot_k() const;

    Value meet_t(const Value& a, const Value& b) const;
    Value join_t(const Value& a, const Value& b) const;
    Value consensus(const Value& a, const Value& b) const;    // knowledge meet
    Value gullibility(const Value& a, const Value& b) const;  // knowledge join
    Value negate(const Value& a) const;
    Value conflate(const Value& a) const;

    bool leq_t(const Value& a, const Value& b) const;
    bool leq_k(const Value& a, const Value& b) const;

    /// Membership test for values already built; used by the operation
    /// entry checks.
    bool contains(const Value& v) const;
    /// Raises StructureError unless v belongs to this carrier.
    void check(const Value& v) const;

    std::string print(const Value& v) const;
    /// Parses "T" | "F" | "U" | "O" (FOUR), "<b,d>" (product),
    /// "[lo,hi]" (interval; requires lo <= hi).
    Value parse_value(std::string_view text) const;

    std::string name() const;
    bool operator==(const Bilattice& other) const;

  private:
    Bilattice(Kind k, BaseLattice b1, BaseLattice b2)
        : kind_(k), base1_(std::move(b1)), base2_(std::move(b2)) {}

    Kind kind_;
    BaseLattice base1_;
    BaseLattice base2_;
};

using BilatticePtr = std::shared_ptr<const Bilattice>;

}  // namespace fitlat

#endif
