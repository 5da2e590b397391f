#ifndef FITLAT_DECIMAL_HPP
#define FITLAT_DECIMAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fitlat {

/// Exact non-negative decimal: digits / 10^scale, kept canonical so that
/// equal numbers have equal representations (no trailing zeros, scale 0 for
/// integers). Comparisons never go through floating point.
///
/// Limits: at most 9 integer digits and 9 fractional digits. Lattice
/// operations only ever take min/max/complement of inputs, so no result
/// needs more precision than its operands.
class Dec {
  public:
    Dec() = default;

    static Dec from_int(std::int64_t n);

    /// Parses "0", "3", "0.25", "1.0". Throws ParseError-free std::nullopt
    /// style is not used here; invalid text raises StructureError.
    static Dec parse(std::string_view text);

    /// top - *this, where top is an integer-valued lattice top (1 for the
    /// unit interval and the two-point chain, n for a finite chain).
    Dec complement_from(std::int64_t top) const;

    bool is_integer() const { return scale_ == 0; }
    std::int64_t integer_value() const { return digits_; }

    std::string to_string() const;

    std::strong_ordering operator<=>(const Dec& other) const;
    bool operator==(const Dec& other) const = default;

  private:
    Dec(std::int64_t digits, int scale) : digits_(digits), scale_(scale) {}
    void canonicalize();

    std::int64_t digits_ = 0;
    int scale_ = 0;
};

Dec min(const Dec& a, const Dec& b);
Dec max(const Dec& a, const Dec& b);

}  // namespace fitlat

#endif
