#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>
#include <string>

#include "fitlat/datalog.hpp"
#include "fitlat/engine.hpp"
#include "fitlat/errors.hpp"
#include "fitlat/parser.hpp"

using namespace fitlat;

namespace {

Atom atom0(const std::string& p) { return Atom{p, {}}; }

DatalogProgram dp(const char* text) {
    return to_datalog(ground(parse_program(text, Bilattice::four())));
}

std::set<Atom> atoms(std::initializer_list<const char*> names) {
    std::set<Atom> out;
    for (const char* n : names) out.insert(atom0(n));
    return out;
}

}  // namespace

TEST_CASE("clause bodies split into conjunctive rules") {
    DatalogProgram p = dp("a <- (b | c) & ~d.\n");
    REQUIRE(p.rules().size() == 2);
    CHECK(p.rules_for(atom0("a")).size() == 2);
    for (std::size_t idx : p.rules_for(atom0("a"))) {
        const DatalogRule& r = p.rules()[idx];
        REQUIRE(r.body.size() == 2);
        CHECK_FALSE(r.body[0].negated);
        CHECK(r.body[1].negated);
        CHECK(r.body[1].atom == atom0("d"));
    }
    CHECK(p.rules_for(atom0("b")).empty());

    // A T disjunct becomes the empty body, a T conjunct disappears.
    DatalogProgram q = dp("a <- T | b.\n");
    REQUIRE(q.rules().size() == 2);
    CHECK(q.rules()[0].body.empty());
    DatalogProgram r = dp("a <- b & T.\n");
    REQUIRE(r.rules().size() == 1);
    CHECK(r.rules()[0].body.size() == 1);

    // Facts arrive as empty-body rules through the folded clause.
    DatalogProgram s = dp("a = T.\nb <- a.\n");
    CHECK(s.rules_for(atom0("a")).size() == 1);
    CHECK(s.rules()[s.rules_for(atom0("a"))[0]].body.empty());
}

TEST_CASE("programs outside the fragment are rejected") {
    CHECK_THROWS_AS(dp("a = F.\nb <- a.\n"), FragmentError);
    CHECK_THROWS_AS(dp("a <- b (+) c.\n"), FragmentError);
    CHECK_THROWS_AS(dp("a <- b | O.\n"), FragmentError);
    auto prod = Bilattice::product(BaseLattice::boolean(),
                                   BaseLattice::boolean());
    CHECK_THROWS_AS(to_datalog(ground(parse_program("a <- ~b.", prod))),
                    FragmentError);
}

TEST_CASE("tp fires exactly the satisfied rules") {
    DatalogProgram p = dp("a <- ~b.\nc <- b.\nd <- T.\n");
    PartialInterpretation empty;
    CHECK(tp(p, empty) == atoms({"d"}));
    CHECK(tp(p, {{}, {atom0("b")}}) == atoms({"a", "d"}));
    CHECK(tp(p, {{atom0("b")}, {}}) == atoms({"c", "d"}));
}

TEST_CASE("potential foundedness needs a non-contradicted derivation") {
    // With nothing known, a <- ~b is a possible derivation of a.
    DatalogProgram p = dp("a <- ~b.\n");
    CHECK(potentially_founded(p, {}) == atoms({"a"}));
    CHECK(unfounded(p, {}) == atoms({"b"}));
    // Once b is known true the rule is contradicted.
    CHECK(potentially_founded(p, {{atom0("b")}, {}}).empty());

    // A pure self-loop never founds itself.
    DatalogProgram q = dp("r <- r.\n");
    CHECK(potentially_founded(q, {}).empty());
    CHECK(unfounded(q, {}) == atoms({"r"}));

    // Positive chains from facts are founded.
    DatalogProgram s = dp("a = T.\nb <- a.\nc <- b.\nd <- e.\n");
    CHECK(potentially_founded(s, {}) == atoms({"a", "b", "c"}));
    CHECK(unfounded(s, {}) == atoms({"d", "e"}));
}

TEST_CASE("the unfounded set satisfies its defining condition") {
    const char* texts[] = {
        "a <- ~b.\nc <- b.\n",
        "p <- ~q.\nq <- ~p.\nr <- r.\n",
        "c <- T.\nb <- ~c.\na <- ~b.\n",
        "a = T.\nb <- a & ~c.\nc <- b.\nd <- d | b.\n",
    };
    for (const char* text : texts) {
        DatalogProgram p = dp(text);
        PartialInterpretation i{tp(p, {}), {}};
        std::set<Atom> u = unfounded(p, i);
        // Every rule for an unfounded atom has a literal contradicted by i
        // or a positive atom inside the unfounded set itself.
        for (const Atom& a : u)
            for (std::size_t idx : p.rules_for(a)) {
                bool blocked = false;
                for (const Literal& l : p.rules()[idx].body) {
                    if (l.negated ? i.pos.count(l.atom) > 0
                                  : i.neg.count(l.atom) > 0) {
                        blocked = true;
                        break;
                    }
                    if (!l.negated && u.count(l.atom) > 0) {
                        blocked = true;
                        break;
                    }
                }
                CHECK(blocked);
            }
    }
}

TEST_CASE("well-founded models of the classic programs") {
    // Mutual negation stays unknown; the self-loop is false.
    DatalogProgram p = dp("p <- ~q.\nq <- ~p.\nr <- r.\n");
    PartialInterpretation w = well_founded(p);
    CHECK(w.pos.empty());
    CHECK(w.neg == atoms({"r"}));

    // A negation chain resolves completely.
    DatalogProgram q = dp("c <- T.\nb <- ~c.\na <- ~b.\n");
    PartialInterpretation wq = well_founded(q);
    CHECK(wq.pos == atoms({"a", "c"}));
    CHECK(wq.neg == atoms({"b"}));

    // The empty program makes every base atom unfounded.
    auto hb = std::make_shared<HerbrandBase>(
        std::map<std::string, std::size_t>{{"x", 0}},
        std::set<std::string>{});
    DatalogProgram e(hb, {});
    PartialInterpretation we = well_founded(e);
    CHECK(we.pos.empty());
    CHECK(we.neg == atoms({"x"}));

    // The win-move game: win(c) wins, win(d) loses, a and b stay open.
    DatalogProgram g = dp(
        "move(a, b) = T.\nmove(b, a) = T.\nmove(b, c) = T.\n"
        "move(c, d) = T.\n"
        "win(X) <- exists Y (move(X, Y) & ~win(Y)).\n");
    PartialInterpretation wg = well_founded(g);
    Atom win_a{"win", {Term::constant("a")}};
    Atom win_b{"win", {Term::constant("b")}};
    Atom win_c{"win", {Term::constant("c")}};
    Atom win_d{"win", {Term::constant("d")}};
    CHECK(wg.pos.count(win_c) == 1);
    CHECK(wg.neg.count(win_d) == 1);
    CHECK(wg.pos.count(win_a) == 0);
    CHECK(wg.neg.count(win_a) == 0);
    CHECK(wg.pos.count(win_b) == 0);
    CHECK(wg.neg.count(win_b) == 0);
}

TEST_CASE("kripke-kleene models of the classic programs") {
    // The self-loop stays unknown here, unlike the well-founded reading.
    DatalogProgram p = dp("r <- r.\n");
    PartialInterpretation k = kripke_kleene(p);
    CHECK(k.pos.empty());
    CHECK(k.neg.empty());

    DatalogProgram q = dp("c <- T.\nb <- ~c.\n");
    PartialInterpretation kq = kripke_kleene(q);
    CHECK(kq.pos == atoms({"c"}));
    CHECK(kq.neg == atoms({"b"}));

    // Rule-less atoms stay unknown rather than turning false.
    DatalogProgram s = dp("a <- ~b.\n");
    PartialInterpretation ks = kripke_kleene(s);
    CHECK(ks.pos.empty());
    CHECK(ks.neg.empty());

    // The empty program leaves everything unknown.
    auto hb = std::make_shared<HerbrandBase>(
        std::map<std::string, std::size_t>{{"x", 0}},
        std::set<std::string>{});
    DatalogProgram e(hb, {});
    PartialInterpretation ke = kripke_kleene(e);
    CHECK(ke == PartialInterpretation{});
}

TEST_CASE("well-founded knows at least as much as kripke-kleene") {
    const char* texts[] = {
        "p <- ~q.\nq <- ~p.\nr <- r.\n",
        "c <- T.\nb <- ~c.\na <- ~b.\n",
        "a = T.\nb <- a & ~c.\nc <- b.\nd <- d | b.\n",
        "move(a, b) = T.\nmove(b, a) = T.\nmove(b, c) = T.\nmove(c, d) = "
        "T.\nwin(X) <- exists Y (move(X, Y) & ~win(Y)).\n",
    };
    for (const char* text : texts) {
        DatalogProgram p = dp(text);
        PartialInterpretation w = well_founded(p);
        PartialInterpretation k = kripke_kleene(p);
        for (const Atom& a : k.pos) CHECK(w.pos.count(a) == 1);
        for (const Atom& a : k.neg) CHECK(w.neg.count(a) == 1);
    }
}

TEST_CASE("partial and four-valued views convert both ways") {
    auto hb = std::make_shared<HerbrandBase>(
        std::map<std::string, std::size_t>{{"a", 0}, {"b", 0}, {"c", 0}},
        std::set<std::string>{});
    PartialInterpretation pi{atoms({"a"}), atoms({"b"})};
    Interpretation i = to_three_valued(pi, hb);
    CHECK(i.value(atom0("a")) == Value::four(FourTag::True));
    CHECK(i.value(atom0("b")) == Value::four(FourTag::False));
    CHECK(i.value(atom0("c")) == Value::four(FourTag::Under));
    CHECK(to_partial(i) == pi);

    PartialInterpretation clash{atoms({"a"}), atoms({"a"})};
    CHECK_THROWS_AS(to_three_valued(clash, hb), StructureError);

    Interpretation over(hb, Bilattice::four());
    over.set(atom0("a"), Value::four(FourTag::Over));
    CHECK_THROWS_AS(to_partial(over), StructureError);

    Interpretation prod(hb, Bilattice::product(BaseLattice::boolean(),
                                               BaseLattice::boolean()));
    CHECK_THROWS_AS(to_partial(prod), StructureError);
}

namespace {

// Random program in the negation fragment, as text: 0-ary atoms a0..aN.
std::string random_fragment_text(std::mt19937& rng, int max_atoms,
                                 int max_rules, int max_body) {
    std::uniform_int_distribution<int> natoms(1, max_atoms);
    int n = natoms(rng);
    std::uniform_int_distribution<int> atom(0, n - 1);
    std::uniform_int_distribution<int> nrules(0, max_rules);
    std::uniform_int_distribution<int> nlits(1, max_body);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> kind(0, 9);
    std::ostringstream out;
    int rules = nrules(rng);
    for (int r = 0; r < rules; ++r) {
        if (kind(rng) == 0) {
            out << "a" << atom(rng) << " = T.\n";
            continue;
        }
        out << "a" << atom(rng) << " <- ";
        int lits = nlits(rng);
        for (int l = 0; l < lits; ++l) {
            if (l > 0) out << " & ";
            if (coin(rng) == 1) out << "~";
            out << "a" << atom(rng);
        }
        out << ".\n";
    }
    return out.str();
}

}  // namespace

TEST_CASE("the three-valued step agrees with the consequence operator") {
    // On the negation fragment, one kk step from a consistent partial
    // interpretation must coincide with one robust-consequence step.
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> tri(0, 2);
    for (int round = 0; round < 300; ++round) {
        std::string text = random_fragment_text(rng, 6, 8, 3);
        GroundProgram g = ground(parse_program(text, Bilattice::four()));
        if (!is_datalog_neg(g)) continue;
        DatalogProgram p = to_datalog(g);

        PartialInterpretation v;
        for (const Atom& a : g.herbrand_base()->atoms()) {
            int t = tri(rng);
            if (t == 1) v.pos.insert(a);
            if (t == 2) v.neg.insert(a);
        }
        PartialInterpretation stepped = kk_step(p, v);
        Interpretation t =
            immediate_consequence(g, to_three_valued(v, g.herbrand_base()));
        CHECK(to_partial(t) == stepped);
    }
}
