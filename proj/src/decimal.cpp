#include "fitlat/decimal.hpp"

#include <cctype>

#include "fitlat/errors.hpp"

namespace fitlat {

namespace {
constexpr int kMaxIntDigits = 9;
constexpr int kMaxFracDigits = 9;

std::int64_t pow10(int n) {
    std::int64_t p = 1;
    while (n-- > 0) p *= 10;
    return p;
}
}  // namespace

Dec Dec::from_int(std::int64_t n) {
    if (n < 0) throw StructureError("decimal values must be non-negative");
    return Dec(n, 0);
}

Dec Dec::parse(std::string_view text) {
    if (text.empty()) throw StructureError("empty decimal literal");
    std::size_t i = 0;
    std::int64_t digits = 0;
    int int_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits = digits * 10 + (text[i] - '0');
        ++int_digits;
        ++i;
    }
    if (int_digits == 0 || int_digits > kMaxIntDigits)
        throw StructureError("bad decimal literal '" + std::string(text) + "'");
    int scale = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        int frac_digits = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits = digits * 10 + (text[i] - '0');
            ++frac_digits;
            ++i;
        }
        if (frac_digits == 0 || frac_digits > kMaxFracDigits)
            throw StructureError("bad decimal literal '" + std::string(text) +
                                 "'");
        scale = frac_digits;
    }
    if (i != text.size())
        throw StructureError("bad decimal literal '" + std::string(text) + "'");
    Dec d(digits, scale);
    d.canonicalize();
    return d;
}

void Dec::canonicalize() {
    while (scale_ > 0 && digits_ % 10 == 0) {
        digits_ /= 10;
        --scale_;
    }
}

Dec Dec::complement_from(std::int64_t top) const {
    // top * 10^scale - digits stays well inside int64 given the digit caps.
    std::int64_t scaled_top = top * pow10(scale_);
    if (digits_ > scaled_top)
        throw StructureError("complement of " + to_string() +
                             " from smaller top " + std::to_string(top));
    Dec d(scaled_top - digits_, scale_);
    d.canonicalize();
    return d;
}

std::string Dec::to_string() const {
    std::string whole = std::to_string(digits_ / pow10(scale_));
    if (scale_ == 0) return whole;
    std::string frac = std::to_string(digits_ % pow10(scale_));
    frac.insert(0, static_cast<std::size_t>(scale_) - frac.size(), '0');
    return whole + "." + frac;
}

std::strong_ordering Dec::operator<=>(const Dec& other) const {
    // Cross-scale: compare digits * 10^(other.scale) with
    // other.digits * 10^scale in 128-bit to rule out overflow.
    __int128 lhs = static_cast<__int128>(digits_) * pow10(other.scale_);
    __int128 rhs = static_cast<__int128>(other.digits_) * pow10(scale_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Dec min(const Dec& a, const Dec& b) { return a <= b ? a : b; }
Dec max(const Dec& a, const Dec& b) { return a >= b ? a : b; }

}  // namespace fitlat
