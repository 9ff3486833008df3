#include "kq/presentation.hpp"

#include "kq/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace kq;
using kqtest::load_diagram;

namespace {

FqElement fq(Sym base) { return FqElement(base, {}); }

std::mt19937 rng(4242);

FqElement random_element(const std::vector<Sym>& gens, int word_len) {
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    GroupWord w;
    for (int i = 0; i < word_len; ++i)
        w.append(gens[pick(rng)], sgn(rng) ? 1 : -1);
    return FqElement(gens[pick(rng)], std::move(w));
}

std::multiset<std::string> relation_strings(const QPresentation& p) {
    std::multiset<std::string> out;
    for (const auto& r : p.primary_rels)
        out.insert(r.str());
    return out;
}

} // namespace

TEST_CASE("free quandle multiplication") {
    Sym a = Sym::x(1), b = Sym::x(2);
    CHECK(fq_mult(fq(a), fq(a)) == fq(a)); // idempotence via ip-reduction
    CHECK(fq_mult(fq(a), fq(b)) == FqElement(a, GroupWord(b)));
    CHECK(fq_mult(fq_mult(fq(a), fq(b)), fq(b), true) == fq(a));

    // right translation is invertible for arbitrary elements
    std::vector<Sym> gens{Sym::x(1), Sym::x(2), Sym::x(3)};
    for (int i = 0; i < 200; ++i) {
        FqElement x = random_element(gens, 3);
        FqElement y = random_element(gens, 3);
        CHECK(fq_mult(fq_mult(x, y), y, true) == x);
        CHECK(fq_mult(fq_mult(x, y, true), y) == x);
    }
}

TEST_CASE("free quandle self-distributivity") {
    std::vector<Sym> gens{Sym::x(1), Sym::x(2), Sym::x(3), Sym::x(4)};
    for (int i = 0; i < 200; ++i) {
        FqElement x = random_element(gens, 2);
        FqElement y = random_element(gens, 2);
        FqElement z = random_element(gens, 2);
        CHECK(fq_mult(fq_mult(x, y), z) == fq_mult(fq_mult(x, z), fq_mult(y, z)));
    }
}

TEST_CASE("action and augmentation") {
    FqElement a(Sym::x(1), {});
    CHECK(fq_act(a, GroupWord()) == a);
    CHECK(fq_act(a, GroupWord(Sym::x(1))) == a); // ip-reduction
    FqElement x3(Sym::x(3), {});
    GroupWord a1_inv(Sym::a(1), -1);
    CHECK(fq_act(x3, a1_inv) == FqElement(Sym::x(3), a1_inv));
    CHECK(fq_augmentation(FqElement(Sym::x(1), GroupWord(Sym::x(2)))).str() == "x2^-1 x1 x2");
}

TEST_CASE("group word basics") {
    GroupWord w(Sym::y(1));
    w.append(Sym::y(1), -1);
    CHECK(w.empty());
    GroupWord v(Sym::y(1));
    v.append(Sym::y(2), -1);
    CHECK(v.inverse().str() == "y2 y1^-1");
    CHECK(v.pow(2).str() == "y1 y2^-1 y1 y2^-1");
    CHECK(v.pow(-1) == v.inverse());
    CHECK(v.pow(0).empty());
    CHECK(GroupWord::commutator(GroupWord(Sym::a(1)), v).str() == "a1 y1 y2^-1 a1^-1 y2 y1^-1");
}

TEST_CASE("present_knot") {
    QPresentation p = present_knot(load_diagram("trefoil.json"));
    CHECK(p.is_primary());
    CHECK(p.primary_gens.size() == 3);
    REQUIRE(p.primary_rels.size() == 3);
    CHECK(relation_strings(p) ==
          std::multiset<std::string>{"x1 * x2 = x3", "x2 * x3 = x1", "x3 * x1 = x2"});

    QPresentation unknot = present_knot(load_diagram("unknot.json"));
    CHECK(unknot.primary_gens.size() == 1);
    CHECK(unknot.primary_rels.empty());

    // the kink relation x1 * x1 = x2 ip-reduces to x1 = x2
    QPresentation kink = present_knot(load_diagram("kink.json"));
    REQUIRE(kink.primary_rels.size() == 1);
    CHECK(kink.primary_rels[0].str() == "x1 = x2");

    CHECK_THROWS_AS(present_knot(load_diagram("pattern_double.json")), WrongKind);
}

TEST_CASE("present_knot emits one generator per arc, one relation per crossing") {
    for (const char* name : {"trefoil.json", "figure8.json", "torus52.json", "kink.json"}) {
        Diagram d = load_diagram(name);
        QPresentation p = present_knot(d);
        CHECK(static_cast<int>(p.primary_gens.size()) == d.arcs);
        CHECK(p.primary_rels.size() == d.crossings.size());
    }
}

TEST_CASE("present_solid_torus reproduces the doubled-pattern presentation") {
    QPresentation p = present_solid_torus(load_diagram("pattern_double.json"));
    CHECK(p.primary_gens.size() == 4);
    REQUIRE(p.operator_gens.size() == 1);
    CHECK(p.operator_gens[0] == Sym::a(1));
    CHECK(relation_strings(p) ==
          std::multiset<std::string>{"x1 * x4 = x2", "x4 * x1 = x3", "x3 ^ a1 = x1",
                                     "x4 ^ a1 = x2"});
    REQUIRE(p.operator_rels.size() == 1);
    GroupWord w;
    w.append(Sym::x(1), -1);
    w.append(Sym::x(2), 1);
    CHECK(p.operator_rels[0] == GroupWord::commutator(GroupWord(Sym::a(1)), w));
    CHECK(p.str().find("oprel: [a1, x1^-1 x2]") != std::string::npos);
}

TEST_CASE("present_solid_torus on the torus-knot pattern") {
    QPresentation p = present_solid_torus(load_diagram("pattern_t52.json"));
    CHECK(p.primary_gens.size() == 7);
    CHECK(relation_strings(p) ==
          std::multiset<std::string>{"x2 * x1 = x7", "x1 * x7 = x6", "x7 * x6 = x5",
                                     "x6 * x5 = x4", "x5 * x4 = x3", "x1 ^ a1 = x3",
                                     "x2 ^ a1 = x4"});
    REQUIRE(p.operator_rels.size() == 1);
    GroupWord w;
    w.append(Sym::x(3), -1);
    w.append(Sym::x(4), -1);
    CHECK(p.operator_rels[0] == GroupWord::commutator(GroupWord(Sym::a(1)), w));
}

TEST_CASE("present_solid_torus with empty axis") {
    QPresentation p = present_solid_torus(load_diagram("pattern_trivial.json"));
    CHECK(p.primary_gens.size() == 1);
    CHECK(p.primary_rels.empty());
    CHECK(p.operator_rels.empty()); // trivial commutator reduced away
}

TEST_CASE("present_lens") {
    Diagram base = load_diagram("pattern_t52.json");
    base.kind = DiagramKind::lens;
    base.surgery = Surgery{1, 0};
    QPresentation s3 = present_lens(base);
    // (1,0) surgery: the extra relator collapses to a1
    REQUIRE(s3.operator_rels.size() == 2);
    CHECK(s3.operator_rels[1] == GroupWord(Sym::a(1)));

    Diagram empty = parse_diagram(
        R"({"kind":"lens","arcs":1,"crossings":[],"axis":[],"surgery":{"p":2,"q":1}})");
    QPresentation l = present_lens(empty);
    REQUIRE(l.operator_rels.size() == 1); // commutator was trivial
    CHECK(l.operator_rels[0] == GroupWord(Sym::a(1)).pow(2));

    Diagram gen = load_diagram("pattern_double.json");
    gen.kind = DiagramKind::lens;
    gen.surgery = Surgery{3, 2};
    QPresentation lp = present_lens(gen);
    REQUIRE(lp.operator_rels.size() == 2);
    GroupWord mu;
    mu.append(Sym::x(1), -1);
    mu.append(Sym::x(2), 1);
    GroupWord expect = GroupWord(Sym::a(1)).pow(3);
    expect.append(mu.pow(-2));
    CHECK(lp.operator_rels[1] == expect);

    CHECK_THROWS_AS(present_lens(load_diagram("pattern_double.json")), WrongKind);
}

TEST_CASE("close_in_sphere merges the doubled pattern to two generators") {
    QPresentation closed = close_in_sphere(present_solid_torus(load_diagram("pattern_double.json")));
    CHECK(closed.is_primary());
    CHECK(closed.primary_gens == std::vector<Sym>{Sym::x(1), Sym::x(2)});
    CHECK(relation_strings(closed) ==
          std::multiset<std::string>{"x1 * x2 = x2", "x2 * x1 = x1"});
}

TEST_CASE("close_in_sphere on the torus-knot pattern gives 5 relations after 2 merges") {
    QPresentation closed = close_in_sphere(present_solid_torus(load_diagram("pattern_t52.json")));
    CHECK(closed.primary_gens ==
          std::vector<Sym>{Sym::x(1), Sym::x(2), Sym::x(5), Sym::x(6), Sym::x(7)});
    CHECK(relation_strings(closed) ==
          std::multiset<std::string>{"x2 * x1 = x7", "x1 * x7 = x6", "x7 * x6 = x5",
                                     "x6 * x5 = x2", "x5 * x2 = x1"});
    for (const auto& r : closed.primary_rels)
        for (const auto& l : r.lhs.word.letters())
            CHECK(l.sym.kind == SymKind::primary);
}

TEST_CASE("close_in_sphere leaves primary presentations alone, rejects lens relators") {
    QPresentation primary = present_knot(load_diagram("trefoil.json"));
    CHECK(close_in_sphere(primary).primary_rels.size() == 3);

    QPresentation torus = present_solid_torus(load_diagram("pattern_trivial.json"));
    CHECK(close_in_sphere(torus).primary_gens.size() == 1);

    Diagram lens = load_diagram("pattern_t52.json");
    lens.kind = DiagramKind::lens;
    lens.surgery = Surgery{2, 1};
    CHECK_THROWS_AS(close_in_sphere(present_lens(lens)), NotSolidTorusPresentation);
}

TEST_CASE("wirtinger presentation") {
    GroupPresentation g = wirtinger_group(load_diagram("trefoil_companion.json"));
    REQUIRE(g.gens.size() == 3);
    REQUIRE(g.relators.size() == 3);
    std::multiset<std::string> rels;
    for (const auto& w : g.relators)
        rels.insert(w.str());
    CHECK(rels == std::multiset<std::string>{"y3^-1 y1 y3 y2^-1", "y2^-1 y3 y2 y1^-1",
                                             "y1^-1 y2 y1 y3^-1"});

    GroupPresentation unknot = wirtinger_group(load_diagram("unknot.json"));
    CHECK(unknot.gens.size() == 1);
    CHECK(unknot.relators.empty());

    // kink relator freely reduces
    GroupPresentation kink = wirtinger_group(load_diagram("kink.json"));
    REQUIRE(kink.relators.size() == 1);
    CHECK(kink.relators[0].str() == "y1 y2^-1");

    CHECK_THROWS_AS(wirtinger_group(load_diagram("pattern_double.json")), WrongKind);
}

TEST_CASE("negative-crossing conventions") {
    // mirrored trefoil: relations read under_out * over = under_in
    QPresentation p = present_knot(load_diagram("trefoil_mirror.json"));
    CHECK(relation_strings(p) ==
          std::multiset<std::string>{"x2 * x3 = x1", "x1 * x2 = x3", "x3 * x1 = x2"});
    GroupPresentation g = wirtinger_group(load_diagram("trefoil_mirror.json"));
    std::multiset<std::string> rels;
    for (const auto& w : g.relators)
        rels.insert(w.str());
    CHECK(rels == std::multiset<std::string>{"y3 y1 y3^-1 y2^-1", "y2 y3 y2^-1 y1^-1",
                                             "y1 y2 y1^-1 y3^-1"});
}

TEST_CASE("presentation text format") {
    QPresentation p = present_solid_torus(load_diagram("pattern_double.json"));
    std::string text = p.str();
    CHECK(text.find("primary: x1 x2 x3 x4\n") == 0);
    CHECK(text.find("operators: a1\n") != std::string::npos);
    CHECK(text.find("rel: x3 ^ a1 = x1\n") != std::string::npos);
}
