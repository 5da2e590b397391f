#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <vector>

#include "fitlat/errors.hpp"
#include "fitlat/herbrand.hpp"
#include "fitlat/interpretation.hpp"
#include "fitlat/parser.hpp"

using namespace fitlat;

namespace {

const Value kT = Value::four(FourTag::True);
const Value kF = Value::four(FourTag::False);
const Value kU = Value::four(FourTag::Under);
const Value kO = Value::four(FourTag::Over);

Atom atom0(const std::string& p) { return Atom{p, {}}; }

HerbrandBasePtr abc_base() {
    return std::make_shared<HerbrandBase>(
        std::map<std::string, std::size_t>{{"a", 0}, {"b", 0}, {"c", 0}},
        std::set<std::string>{});
}

Interpretation make(const HerbrandBasePtr& hb,
                    std::vector<std::pair<std::string, Value>> vals) {
    std::vector<std::pair<Atom, Value>> pairs;
    for (auto& [name, v] : vals) pairs.emplace_back(atom0(name), v);
    return Interpretation::from_pairs(hb, Bilattice::four(), pairs);
}

FormulaPtr lit(const std::string& p) {
    return Formula::literal(false, atom0(p));
}

FormulaPtr nlit(const std::string& p) {
    return Formula::literal(true, atom0(p));
}

}  // namespace

TEST_CASE("values default to Under and Under erases") {
    auto hb = abc_base();
    Interpretation i(hb, Bilattice::four());
    CHECK(i.value(atom0("a")) == kU);
    CHECK_FALSE(i.defines(atom0("a")));
    i.set(atom0("a"), kT);
    CHECK(i.defines(atom0("a")));
    CHECK(i.value(atom0("a")) == kT);
    i.set(atom0("a"), kU);
    CHECK_FALSE(i.defines(atom0("a")));
    CHECK(i.defined().empty());
}

TEST_CASE("assignments are checked against base and carrier") {
    auto hb = abc_base();
    Interpretation i(hb, Bilattice::four());
    CHECK_THROWS_AS(i.set(atom0("zz"), kT), StructureError);
    CHECK_THROWS_AS(i.set(atom0("a"), Value::pair(Dec::from_int(1),
                                                  Dec::from_int(0))),
                    StructureError);
    // Reads are lenient: anything not defined reads as the knowledge bottom.
    CHECK(i.value(atom0("zz")) == kU);
}

TEST_CASE("part-of compares definedness, compatibility allows growth") {
    auto hb = abc_base();
    Interpretation f = make(hb, {{"a", kT}});
    Interpretation g = make(hb, {{"a", kT}, {"b", kF}});
    CHECK(f.is_part_of(g));
    CHECK_FALSE(g.is_part_of(f));
    CHECK(f.is_part_of(f));
    CHECK(f.compatible_with(g));
    CHECK(g.compatible_with(f));

    // Same atom, different value: not part-of and not compatible.
    Interpretation h = make(hb, {{"a", kF}});
    CHECK_FALSE(f.is_part_of(h));
    CHECK_FALSE(f.compatible_with(h));

    // The empty interpretation is part of everything.
    Interpretation e(hb, Bilattice::four());
    CHECK(e.is_part_of(f));
    CHECK(e.compatible_with(h));
}

TEST_CASE("restriction keeps only the chosen atoms") {
    auto hb = abc_base();
    Interpretation f = make(hb, {{"a", kT}, {"b", kF}, {"c", kO}});
    Interpretation r = f.restrict_to({atom0("a"), atom0("c")});
    CHECK(r.value(atom0("a")) == kT);
    CHECK(r.value(atom0("b")) == kU);
    CHECK(r.value(atom0("c")) == kO);
    CHECK(r.is_part_of(f));
    // Restricting to atoms that are not defined is harmless.
    Interpretation s = f.restrict_to({atom0("b"), atom0("zz")});
    CHECK(s.defined().size() == 1);
}

TEST_CASE("knowledge join merges pointwise") {
    auto hb = abc_base();
    Interpretation f = make(hb, {{"a", kT}, {"b", kF}});
    Interpretation h = make(hb, {{"a", kF}, {"c", kT}});
    Interpretation j = f.knowledge_join(h);
    CHECK(j.value(atom0("a")) == kO);
    CHECK(j.value(atom0("b")) == kF);
    CHECK(j.value(atom0("c")) == kT);
    // Meet goes the other way; undefined atoms stay undefined.
    Interpretation m = f.knowledge_meet(h);
    CHECK(m.value(atom0("a")) == kU);
    CHECK(m.value(atom0("b")) == kU);
    CHECK(m.value(atom0("c")) == kU);
    CHECK(m.defined().empty());
}

TEST_CASE("truth meet and join work pointwise over the whole base") {
    auto hb = abc_base();
    Interpretation f = make(hb, {{"a", kT}, {"b", kF}});
    Interpretation h = make(hb, {{"a", kF}, {"b", kO}});
    Interpretation m = f.truth_meet(h);
    CHECK(m.value(atom0("a")) == kF);
    // F meet_t O = F per the truth tables.
    CHECK(m.value(atom0("b")) == kF);
    // Undefined counts as U: U meet U = U.
    CHECK(m.value(atom0("c")) == kU);
    Interpretation j = f.truth_join(h);
    CHECK(j.value(atom0("a")) == kT);
    CHECK(j.value(atom0("b")) == kO);
}

TEST_CASE("negation and saturation act pointwise") {
    auto hb = abc_base();
    Interpretation f = make(hb, {{"a", kT}, {"b", kF}, {"c", kO}});
    Interpretation n = f.negate_pointwise();
    CHECK(n.value(atom0("a")) == kF);
    CHECK(n.value(atom0("b")) == kT);
    CHECK(n.value(atom0("c")) == kO);
    Interpretation s = make(hb, {{"a", kT}}).saturate();
    CHECK(s.value(atom0("a")) == kT);
    CHECK(s.value(atom0("b")) == kO);
    CHECK(s.value(atom0("c")) == kO);
}

TEST_CASE("interpretations from different spaces do not mix") {
    auto hb = abc_base();
    auto other = std::make_shared<HerbrandBase>(
        std::map<std::string, std::size_t>{{"a", 0}},
        std::set<std::string>{});
    Interpretation f(hb, Bilattice::four());
    Interpretation g(other, Bilattice::four());
    CHECK_THROWS_AS((void)f.is_part_of(g), StructureError);
    CHECK_THROWS_AS((void)f.knowledge_join(g), StructureError);
    Interpretation h(hb, Bilattice::product(BaseLattice::boolean(),
                                            BaseLattice::boolean()));
    CHECK_THROWS_AS((void)f.compatible_with(h), StructureError);
}

TEST_CASE("evaluation follows the truth tables") {
    auto hb = abc_base();
    Interpretation i = make(hb, {{"a", kU}, {"b", kF}, {"c", kT}});
    CHECK(eval(i, Formula::binary(BinOp::Join, lit("a"), lit("c"))) == kT);
    CHECK(eval(i, Formula::binary(BinOp::Meet, lit("a"), lit("b"))) == kF);
    CHECK(eval(i, Formula::binary(BinOp::Meet, lit("a"), lit("c"))) == kU);
    CHECK(eval(i, nlit("b")) == kT);
    CHECK(eval(i, nlit("a")) == kU);
    CHECK(eval(i, Formula::constant(kO)) == kO);
    CHECK(eval(i, Formula::binary(BinOp::Gullibility, lit("b"), lit("c"))) ==
          kO);
    CHECK(eval(i, Formula::binary(BinOp::Consensus, lit("b"), lit("c"))) ==
          kU);
}

TEST_CASE("evaluation handles quantifiers over the universe") {
    auto hb = std::make_shared<HerbrandBase>(
        std::map<std::string, std::size_t>{{"q", 1}},
        std::set<std::string>{"x", "y"});
    auto bl = Bilattice::four();
    Interpretation i = Interpretation::from_pairs(
        hb, bl,
        {{Atom{"q", {Term::constant("x")}}, kT},
         {Atom{"q", {Term::constant("y")}}, kF}});
    FormulaPtr ex = Formula::quantified(
        Quant::Exists, "V",
        Formula::literal(false, Atom{"q", {Term::variable("V")}}));
    FormulaPtr all = Formula::quantified(
        Quant::Forall, "V",
        Formula::literal(false, Atom{"q", {Term::variable("V")}}));
    CHECK(eval(i, ex) == kT);
    CHECK(eval(i, all) == kF);

    // A free variable cannot be evaluated.
    FormulaPtr freev =
        Formula::literal(false, Atom{"q", {Term::variable("V")}});
    CHECK_THROWS_AS(eval(i, freev), EvalError);

    // Quantifying over an empty universe has no value either.
    auto empty = std::make_shared<HerbrandBase>(
        std::map<std::string, std::size_t>{{"p", 0}},
        std::set<std::string>{});
    Interpretation j(empty, bl);
    CHECK_THROWS_AS(eval(j, ex), EvalError);
}

TEST_CASE("evaluation is monotone in the knowledge order") {
    auto hb = abc_base();
    auto bl = Bilattice::four();
    const Value vals[4] = {kF, kT, kU, kO};
    std::mt19937 rng(20240816);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> op(0, 3);
    auto random_formula = [&](auto&& self, int depth) -> FormulaPtr {
        if (depth == 0 || pick(rng) == 0) {
            int w = pick(rng);
            if (w == 0) return Formula::constant(vals[op(rng)]);
            const char* names[3] = {"a", "b", "c"};
            return Formula::literal(pick(rng) % 2 == 0, atom0(names[w - 1]));
        }
        return Formula::binary(static_cast<BinOp>(op(rng)),
                               self(self, depth - 1), self(self, depth - 1));
    };
    for (int round = 0; round < 500; ++round) {
        FormulaPtr f = random_formula(random_formula, 3);
        Interpretation lo(hb, bl);
        Interpretation hi(hb, bl);
        for (const Atom& a : hb->atoms()) {
            Value v = vals[pick(rng)];
            lo.set(a, v);
            // Raise some atoms in the knowledge order.
            hi.set(a, pick(rng) % 2 == 0 ? bl->gullibility(v, vals[pick(rng)])
                                         : v);
        }
        CHECK(bl->leq_k(eval(lo, f), eval(hi, f)));
    }
}

TEST_CASE("robust values agree with checking every completion") {
    auto hb = abc_base();
    auto bl = Bilattice::four();
    const Value vals[4] = {kF, kT, kU, kO};
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 3);
    auto random_formula = [&](auto&& self, int depth) -> FormulaPtr {
        if (depth == 0 || pick(rng) == 0) {
            int w = pick(rng);
            if (w == 0) return Formula::constant(vals[pick(rng)]);
            const char* names[3] = {"a", "b", "c"};
            return Formula::literal(pick(rng) % 2 == 0, atom0(names[w - 1]));
        }
        return Formula::binary(static_cast<BinOp>(pick(rng)),
                               self(self, depth - 1), self(self, depth - 1));
    };

    // Oracle: a formula has a robust value exactly when every completion of
    // the interpretation (every way of defining the undefined atoms) gives
    // the same result.
    auto oracle = [&](const Interpretation& i,
                      const FormulaPtr& f) -> std::optional<Value> {
        std::vector<Atom> undef;
        for (const Atom& a : hb->atoms())
            if (!i.defines(a)) undef.push_back(a);
        std::optional<Value> common;
        std::size_t combos = 1;
        for (std::size_t k = 0; k < undef.size(); ++k) combos *= 4;
        for (std::size_t mask = 0; mask < combos; ++mask) {
            Interpretation j = i;
            std::size_t m = mask;
            for (const Atom& a : undef) {
                j.set(a, vals[m % 4]);
                m /= 4;
            }
            Value v = eval(j, f);
            if (!common) {
                common = v;
            } else if (!(*common == v)) {
                return std::nullopt;
            }
        }
        return common;
    };

    for (int round = 0; round < 400; ++round) {
        FormulaPtr f = random_formula(random_formula, 3);
        Interpretation i(hb, bl);
        for (const Atom& a : hb->atoms()) {
            if (pick(rng) % 2 == 0) continue;
            i.set(a, vals[pick(rng)]);
        }
        auto expect = oracle(i, f);
        auto got = robust_value(i, f);
        CHECK(got == expect);
    }
}

TEST_CASE("known robust and non-robust bodies") {
    auto hb = abc_base();
    // a | c with c true is robustly true no matter what a becomes.
    Interpretation i = make(hb, {{"c", kT}});
    FormulaPtr f = Formula::binary(BinOp::Join, lit("a"), lit("c"));
    auto rv = robust_value(i, f);
    REQUIRE(rv.has_value());
    CHECK(*rv == kT);
    // a & c is not robust: the undefined a can push it anywhere.
    FormulaPtr g = Formula::binary(BinOp::Meet, lit("a"), lit("c"));
    CHECK_FALSE(robust_value(i, g).has_value());
    // A defined interpretation makes everything robust.
    Interpretation full = make(hb, {{"a", kU}, {"b", kU}, {"c", kT}});
    // Explicit Under assignments erase, so atoms stay undefined and the
    // value is still not robust.
    CHECK_FALSE(robust_value(full, g).has_value());
    Interpretation really = make(hb, {{"a", kF}, {"b", kF}, {"c", kT}});
    auto rg = robust_value(really, g);
    REQUIRE(rg.has_value());
    CHECK(*rg == kF);
}

TEST_CASE("product interpretations saturate to the knowledge top") {
    auto hb = abc_base();
    auto bl = Bilattice::product(BaseLattice::unit(), BaseLattice::unit());
    Interpretation i(hb, bl);
    i.set(atom0("a"), Value::pair(Dec::parse("0.3"), Dec::parse("0.2")));
    Interpretation s = i.saturate();
    CHECK(s.value(atom0("a")) ==
          Value::pair(Dec::parse("0.3"), Dec::parse("0.2")));
    CHECK(s.value(atom0("b")) == bl->top_k());
}
