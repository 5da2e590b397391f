#include "fitlat/bilattice.hpp"

#include <array>

#include "fitlat/errors.hpp"

namespace fitlat {

// ---------------------------------------------------------------------------
// BaseLattice

BaseLattice BaseLattice::chain(std::int64_t n) {
    if (n < 1 || n > 1000000)
        throw ConfigError("chain height must be between 1 and 1000000");
    return BaseLattice(Kind::Chain, n);
}

bool BaseLattice::contains(const Dec& x) const {
    switch (kind_) {
        case Kind::Bool:
        case Kind::Chain:
            return x.is_integer() && x.integer_value() >= 0 &&
                   x.integer_value() <= top_;
        case Kind::Unit:
            return Dec::from_int(0) <= x && x <= Dec::from_int(1);
    }
    return false;
}

Dec BaseLattice::parse_element(std::string_view text) const {
    Dec d;
    if (kind_ == Kind::Bool && (text == "false" || text == "true")) {
        d = Dec::from_int(text == "true" ? 1 : 0);
    } else {
        d = Dec::parse(text);
    }
    if (!contains(d))
        throw StructureError("element '" + std::string(text) +
                             "' is outside base lattice " + name());
    return d;
}

std::string BaseLattice::name() const {
    switch (kind_) {
        case Kind::Bool:
            return "bool";
        case Kind::Chain:
            return "chain" + std::to_string(top_);
        case Kind::Unit:
            return "unit";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FOUR via its belief/doubt encoding
//
// Under=(0,0) True=(1,0) False=(0,1) Over=(1,1). Truth operations take the
// meet/join of belief and the opposite of doubt; knowledge operations act
// coordinatewise. This encoding makes every lattice law hold by
// construction instead of by table maintenance.

namespace {

struct BD {
    bool b;
    bool d;
};

BD to_bd(FourTag t) {
    switch (t) {
        case FourTag::Under:
            return {false, false};
        case FourTag::True:
            return {true, false};
        case FourTag::False:
            return {false, true};
        case FourTag::Over:
            return {true, true};
    }
    return {false, false};
}

FourTag from_bd(BD v) {
    if (v.b) return v.d ? FourTag::Over : FourTag::True;
    return v.d ? FourTag::False : FourTag::Under;
}

const char* four_name(FourTag t) {
    switch (t) {
        case FourTag::False:
            return "F";
        case FourTag::True:
            return "T";
        case FourTag::Under:
            return "U";
        case FourTag::Over:
            return "O";
    }
    return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// Bilattice

std::shared_ptr<const Bilattice> Bilattice::four() {
    static const std::shared_ptr<const Bilattice> instance(new Bilattice(
        Kind::Four, BaseLattice::boolean(), BaseLattice::boolean()));
    return instance;
}

std::shared_ptr<const Bilattice> Bilattice::product(BaseLattice l1,
                                                    BaseLattice l2) {
    return std::shared_ptr<const Bilattice>(
        new Bilattice(Kind::Product, std::move(l1), std::move(l2)));
}

std::shared_ptr<const Bilattice> Bilattice::interval(BaseLattice base) {
    BaseLattice copy = base;
    return std::shared_ptr<const Bilattice>(
        new Bilattice(Kind::Interval, std::move(base), std::move(copy)));
}

namespace {

BaseLattice parse_base(std::string_view text) {
    if (text == "bool") return BaseLattice::boolean();
    if (text == "unit") return BaseLattice::unit();
    if (text.substr(0, 5) == "chain") {
        std::string digits(text.substr(5));
        if (!digits.empty() &&
            digits.find_first_not_of("0123456789") == std::string::npos)
            return BaseLattice::chain(std::stoll(digits));
    }
    throw ConfigError("unknown base lattice '" + std::string(text) +
                      "' (expected bool, unit, or chainN)");
}

}  // namespace

std::shared_ptr<const Bilattice> Bilattice::from_selector(std::string_view s) {
    if (s == "four") return four();
    auto colon = s.find(':');
    if (colon != std::string_view::npos) {
        std::string_view head = s.substr(0, colon);
        std::string_view rest = s.substr(colon + 1);
        if (head == "product") {
            auto comma = rest.find(',');
            if (comma == std::string_view::npos) {
                BaseLattice b = parse_base(rest);
                return product(b, b);
            }
            return product(parse_base(rest.substr(0, comma)),
                           parse_base(rest.substr(comma + 1)));
        }
        if (head == "interval") return interval(parse_base(rest));
    }
    throw ConfigError("unknown bilattice selector '" + std::string(s) +
                      "' (expected four, product:<base>[,<base>], or "
                      "interval:<base>)");
}

bool Bilattice::is_finite() const {
    if (kind_ == Kind::Four) return true;
    return base1_.is_finite() && base2_.is_finite();
}

bool Bilattice::has_negation() const {
    if (kind_ == Kind::Four || kind_ == Kind::Interval) return true;
    return base1_ == base2_;
}

bool Bilattice::has_conflation() const { return has_negation(); }

Value Bilattice::top_t() const {
    switch (kind_) {
        case Kind::Four:
            return Value::four(FourTag::True);
        case Kind::Product:
            return Value::pair(base1_.top(), base2_.bot());
        case Kind::Interval:
            return Value::interval(base1_.top(), base1_.top());
    }
    return Value();
}

Value Bilattice::bot_t() const {
    switch (kind_) {
        case Kind::Four:
            return Value::four(FourTag::False);
        case Kind::Product:
            return Value::pair(base1_.bot(), base2_.top());
        case Kind::Interval:
            return Value::interval(base1_.bot(), base1_.bot());
    }
    return Value();
}

Value Bilattice::top_k() const {
    switch (kind_) {
        case Kind::Four:
            return Value::four(FourTag::Over);
        case Kind::Product:
            return Value::pair(base1_.top(), base2_.top());
        case Kind::Interval:
            // Contradictory bounds; see the Value class comment.
            return Value::interval(base1_.top(), base1_.bot());
    }
    return Value();
}

Value Bilattice::bot_k() const {
    switch (kind_) {
        case Kind::Four:
            return Value::four(FourTag::Under);
        case Kind::Product:
            return Value::pair(base1_.bot(), base2_.bot());
        case Kind::Interval:
            return Value::interval(base1_.bot(), base1_.top());
    }
    return Value();
}

bool Bilattice::contains(const Value& v) const {
    switch (kind_) {
        case Kind::Four:
            return v.kind() == Value::Kind::Four;
        case Kind::Product:
            return v.kind() == Value::Kind::Pair &&
                   base1_.contains(v.first()) && base2_.contains(v.second());
        case Kind::Interval:
            return v.kind() == Value::Kind::Interval &&
                   base1_.contains(v.first()) && base1_.contains(v.second());
    }
    return false;
}

void Bilattice::check(const Value& v) const {
    if (!contains(v))
        throw StructureError("value " + print(v) +
                             " does not belong to bilattice " + name());
}

Value Bilattice::meet_t(const Value& a, const Value& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag()), y = to_bd(b.four_tag());
            return Value::four(from_bd({x.b && y.b, x.d || y.d}));
        }
        case Kind::Product:
            return Value::pair(min(a.first(), b.first()),
                               max(a.second(), b.second()));
        case Kind::Interval:
            return Value::interval(min(a.first(), b.first()),
                                   min(a.second(), b.second()));
    }
    return Value();
}

Value Bilattice::join_t(const Value& a, const Value& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag()), y = to_bd(b.four_tag());
            return Value::four(from_bd({x.b || y.b, x.d && y.d}));
        }
        case Kind::Product:
            return Value::pair(max(a.first(), b.first()),
                               min(a.second(), b.second()));
        case Kind::Interval:
            return Value::interval(max(a.first(), b.first()),
                                   max(a.second(), b.second()));
    }
    return Value();
}

Value Bilattice::consensus(const Value& a, const Value& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag()), y = to_bd(b.four_tag());
            return Value::four(from_bd({x.b && y.b, x.d && y.d}));
        }
        case Kind::Product:
            return Value::pair(min(a.first(), b.first()),
                               min(a.second(), b.second()));
        case Kind::Interval:
            return Value::interval(min(a.first(), b.first()),
                                   max(a.second(), b.second()));
    }
    return Value();
}

Value Bilattice::gullibility(const Value& a, const Value& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag()), y = to_bd(b.four_tag());
            return Value::four(from_bd({x.b || y.b, x.d || y.d}));
        }
        case Kind::Product:
            return Value::pair(max(a.first(), b.first()),
                               max(a.second(), b.second()));
        case Kind::Interval:
            return Value::interval(max(a.first(), b.first()),
                                   min(a.second(), b.second()));
    }
    return Value();
}

Value Bilattice::negate(const Value& a) const {
    check(a);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag());
            return Value::four(from_bd({x.d, x.b}));
        }
        case Kind::Product:
            if (!has_negation())
                throw ConfigError("bilattice " + name() +
                                  " has no negation (bases differ)");
            return Value::pair(a.second(), a.first());
        case Kind::Interval:
            return Value::interval(base1_.complement(a.second()),
                                   base1_.complement(a.first()));
    }
    return Value();
}

Value Bilattice::conflate(const Value& a) const {
    check(a);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag());
            return Value::four(from_bd({!x.d, !x.b}));
        }
        case Kind::Product:
            if (!has_conflation())
                throw ConfigError("bilattice " + name() +
                                  " has no conflation (bases differ)");
            return Value::pair(base2_.complement(a.second()),
                               base1_.complement(a.first()));
        case Kind::Interval:
            return Value::interval(a.second(), a.first());
    }
    return Value();
}

bool Bilattice::leq_t(const Value& a, const Value& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag()), y = to_bd(b.four_tag());
            return x.b <= y.b && y.d <= x.d;
        }
        case Kind::Product:
            return a.first() <= b.first() && b.second() <= a.second();
        case Kind::Interval:
            return a.first() <= b.first() && a.second() <= b.second();
    }
    return false;
}

bool Bilattice::leq_k(const Value& a, const Value& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Four: {
            BD x = to_bd(a.four_tag()), y = to_bd(b.four_tag());
            return x.b <= y.b && x.d <= y.d;
        }
        case Kind::Product:
            return a.first() <= b.first() && a.second() <= b.second();
        case Kind::Interval:
            return a.first() <= b.first() && b.second() <= a.second();
    }
    return false;
}

std::string Bilattice::print(const Value& v) const {
    switch (v.kind()) {
        case Value::Kind::Four:
            return four_name(v.four_tag());
        case Value::Kind::Pair:
            return "<" + v.first().to_string() + "," + v.second().to_string() +
                   ">";
        case Value::Kind::Interval:
            return "[" + v.first().to_string() + "," + v.second().to_string() +
                   "]";
    }
    return "?";
}

Value Bilattice::parse_value(std::string_view text) const {
    if (text.empty()) throw StructureError("empty value literal");
    if (text.size() == 1) {
        FourTag tag;
        switch (text[0]) {
            case 'T':
                tag = FourTag::True;
                break;
            case 'F':
                tag = FourTag::False;
                break;
            case 'U':
                tag = FourTag::Under;
                break;
            case 'O':
                tag = FourTag::Over;
                break;
            default:
                throw StructureError("unknown value literal '" +
                                     std::string(text) + "'");
        }
        Value v = Value::four(tag);
        check(v);
        return v;
    }
    char open = text.front();
    char close = text.back();
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw StructureError("unknown value literal '" + std::string(text) +
                             "'");
    std::string_view lhs = text.substr(1, comma - 1);
    std::string_view rhs = text.substr(comma + 1, text.size() - comma - 2);
    if (open == '<' && close == '>') {
        if (kind_ != Kind::Product)
            throw StructureError("product literal '" + std::string(text) +
                                 "' is not valid for bilattice " + name());
        return Value::pair(base1_.parse_element(lhs), base2_.parse_element(rhs));
    }
    if (open == '[' && close == ']') {
        if (kind_ != Kind::Interval)
            throw StructureError("interval literal '" + std::string(text) +
                                 "' is not valid for bilattice " + name());
        Dec lo = base1_.parse_element(lhs);
        Dec hi = base1_.parse_element(rhs);
        if (!(lo <= hi))
            throw StructureError("interval literal '" + std::string(text) +
                                 "' requires lo <= hi");
        return Value::interval(std::move(lo), std::move(hi));
    }
    throw StructureError("unknown value literal '" + std::string(text) + "'");
}

std::string Bilattice::name() const {
    switch (kind_) {
        case Kind::Four:
            return "four";
        case Kind::Product:
            if (base1_ == base2_) return "product:" + base1_.name();
            return "product:" + base1_.name() + "," + base2_.name();
        case Kind::Interval:
            return "interval:" + base1_.name();
    }
    return "?";
}

bool Bilattice::operator==(const Bilattice& other) const {
    return kind_ == other.kind_ && base1_ == other.base1_ &&
           base2_ == other.base2_;
}

}  // namespace fitlat
