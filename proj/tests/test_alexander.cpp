#include "kq/alexander.hpp"

#include "kq/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kq;
using kqtest::load_diagram;

namespace {

LaurentPoly lp(const std::string& s) { return LaurentPoly::parse(s); }

QPresentation trefoil_presentation() { return present_knot(load_diagram("trefoil.json")); }

} // namespace

TEST_CASE("normalize_relation") {
    QPresentation p;
    p.primary_gens = {Sym::x(1), Sym::x(2), Sym::x(3), Sym::x(4)};

    QRelation plain{FqElement(Sym::x(1), GroupWord(Sym::x(2))), FqElement(Sym::x(3), {})};
    TranslationForm f = normalize_relation(p, plain);
    CHECK(f.y == Sym::x(1));
    CHECK(f.z == Sym::x(3));
    REQUIRE(f.steps.size() == 1);
    CHECK(f.steps[0] == std::pair<Sym, long>{Sym::x(2), 1});

    // (x1 * x2) *~ x4 = x3: steps in application order
    FqElement lhs = fq_mult(fq_mult(FqElement(Sym::x(1), {}), FqElement(Sym::x(2), {})),
                            FqElement(Sym::x(4), {}), true);
    TranslationForm g = normalize_relation(p, {lhs, FqElement(Sym::x(3), {})});
    CHECK(g.y == Sym::x(1));
    CHECK(g.z == Sym::x(3));
    REQUIRE(g.steps.size() == 2);
    CHECK(g.steps[0] == std::pair<Sym, long>{Sym::x(2), 1});
    CHECK(g.steps[1] == std::pair<Sym, long>{Sym::x(4), -1});

    // bare equality
    TranslationForm h = normalize_relation(p, {FqElement(Sym::x(1), {}), FqElement(Sym::x(3), {})});
    CHECK(h.steps.empty());
    CHECK(h.y == Sym::x(1));
    CHECK(h.z == Sym::x(3));

    // repeated translations collapse into one step
    GroupWord sq(Sym::x(2));
    sq.append(Sym::x(2), 1);
    TranslationForm k =
        normalize_relation(p, {FqElement(Sym::x(1), sq), FqElement(Sym::x(3), {})});
    REQUIRE(k.steps.size() == 1);
    CHECK(k.steps[0] == std::pair<Sym, long>{Sym::x(2), 2});

    QRelation bad{FqElement(Sym::x(1), GroupWord(Sym::a(1))), FqElement(Sym::x(3), {})};
    CHECK_THROWS_AS(normalize_relation(p, bad), NotPrimary);
}

TEST_CASE("linearize the trefoil") {
    LMatrix m = linearize(trefoil_presentation());
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    // rows follow the relation list: x1*x2=x3, x2*x3=x1, x3*x1=x2
    CHECK(m.at(0, 0) == lp("1 - t"));
    CHECK(m.at(0, 1) == lp("-1"));
    CHECK(m.at(1, 0) == lp("t"));
    CHECK(m.at(1, 1) == lp("1 - t"));
    CHECK(m.at(2, 0) == lp("-1"));
    CHECK(m.at(2, 1) == lp("t"));
    CHECK(delta(trefoil_presentation(), 1) == lp("t^2 - t + 1"));
    CHECK(delta(trefoil_presentation(), 2) == lp("1"));
}

TEST_CASE("linearize dimensions and degenerate cases") {
    QPresentation unknot = present_knot(load_diagram("unknot.json"));
    LMatrix m = linearize(unknot);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 0);
    CHECK(delta(unknot, 1) == lp("1"));

    QPresentation fig8 = present_knot(load_diagram("figure8.json"));
    LMatrix f = linearize(fig8);
    CHECK(f.rows() == 4);
    CHECK(f.cols() == 3);
    CHECK(delta(fig8, 1) == lp("t^2 - 3t + 1"));

    QPresentation torus = present_solid_torus(load_diagram("pattern_double.json"));
    CHECK_THROWS_AS(linearize(torus), NotPrimary);
}

TEST_CASE("figure-eight delta against the minors oracle") {
    LMatrix f = linearize(present_knot(load_diagram("figure8.json")));
    LaurentPoly d1 = delta_poly(f, 1);
    CHECK(d1 == lp("t^2 - 3t + 1"));
    kqtest::IPoly di = kqtest::from_laurent(d1);
    for (const auto& minor : kqtest::oracle_minors(f, 3))
        CHECK(kqtest::ipoly_divides(di, minor));
}

TEST_CASE("linearize handles repeated translations with higher powers of t") {
    // R_{x2}^2 applied to x1 equals x3: coefficients (1 - t^2), t^2, -1
    QPresentation p;
    p.primary_gens = {Sym::x(1), Sym::x(2), Sym::x(3)};
    GroupWord twice(Sym::x(2));
    twice.append(Sym::x(2), 1);
    p.primary_rels.push_back({FqElement(Sym::x(1), twice), FqElement(Sym::x(3), {})});

    LMatrix full = linearize_full(p);
    REQUIRE(full.rows() == 1);
    CHECK(full.at(0, 0) == lp("t^2"));
    CHECK(full.at(0, 1) == lp("1 - t^2"));
    CHECK(full.at(0, 2) == lp("-1"));

    // and an inverse pair: R_{x2}^{-1} applied to x1 equals x3
    QPresentation q;
    q.primary_gens = {Sym::x(1), Sym::x(2), Sym::x(3)};
    q.primary_rels.push_back(
        {FqElement(Sym::x(1), GroupWord(Sym::x(2), -1)), FqElement(Sym::x(3), {})});
    LMatrix g = linearize_full(q);
    CHECK(g.at(0, 0) == lp("t^-1"));
    CHECK(g.at(0, 1) == lp("1 - t^-1"));
    CHECK(g.at(0, 2) == lp("-1"));
}

TEST_CASE("rows of the full linearization vanish at t = 1") {
    for (const char* name : {"trefoil.json", "figure8.json", "torus52.json", "kink.json"}) {
        LMatrix full = linearize_full(present_knot(load_diagram(name)));
        for (int r = 0; r < full.rows(); ++r) {
            LaurentPoly sum;
            for (int c = 0; c < full.cols(); ++c)
                sum += full.at(r, c);
            CHECK(eval_at(sum, 1) == BigRat(0));
        }
    }
}

TEST_CASE("knot Alexander polynomial sanity: |delta(1)| = 1 and symmetry") {
    QPresentation t52closed = close_in_sphere(present_solid_torus(load_diagram("pattern_t52.json")));
    std::vector<QPresentation> knots = {
        present_knot(load_diagram("trefoil.json")), present_knot(load_diagram("figure8.json")),
        present_knot(load_diagram("torus52.json")), present_knot(load_diagram("unknot.json")),
        t52closed};
    for (const auto& p : knots) {
        LaurentPoly d1 = delta(p, 1);
        BigRat at1 = eval_at(d1, 1);
        CHECK((at1 == BigRat(1) || at1 == BigRat(-1)));
        CHECK(normalized(d1) == normalized(subst_power(d1, -1)));
    }
}

TEST_CASE("torus knot closure matches the classical 5_1 diagram") {
    QPresentation closed = close_in_sphere(present_solid_torus(load_diagram("pattern_t52.json")));
    LaurentPoly d = delta(closed, 1);
    CHECK(d == lp("t^4 - t^3 + t^2 - t + 1"));
    CHECK(d == delta(present_knot(load_diagram("torus52.json")), 1));
}

TEST_CASE("delta survives Reidemeister stabilization of the diagram") {
    LaurentPoly expected = lp("t^2 - t + 1");

    // trefoil with an extra positive kink on arc 3 (arc split 3 -> 4)
    Diagram kinked = parse_diagram(R"({
      "kind": "classical", "arcs": 4,
      "crossings": [
        {"under_in": 1, "over": 2, "under_out": 3, "sign": 1},
        {"under_in": 2, "over": 3, "under_out": 1, "sign": 1},
        {"under_in": 4, "over": 1, "under_out": 2, "sign": 1},
        {"under_in": 3, "over": 3, "under_out": 4, "sign": 1}
      ]})");
    CHECK(component_count(kinked) == 1);
    CHECK(delta(present_knot(kinked), 1) == expected);

    // same with a negative kink
    Diagram kinked_neg = parse_diagram(R"({
      "kind": "classical", "arcs": 4,
      "crossings": [
        {"under_in": 1, "over": 2, "under_out": 3, "sign": 1},
        {"under_in": 2, "over": 3, "under_out": 1, "sign": 1},
        {"under_in": 4, "over": 1, "under_out": 2, "sign": 1},
        {"under_in": 3, "over": 3, "under_out": 4, "sign": -1}
      ]})");
    CHECK(delta(present_knot(kinked_neg), 1) == expected);

    // trefoil with arc 1 poked under arc 2 and back (a +/- crossing pair,
    // arc split 1 -> 4 -> 5); exercises the mixed-sign conventions together
    for (int s : {1, -1}) {
        std::string poked_json = std::string(R"({
          "kind": "classical", "arcs": 5,
          "crossings": [
            {"under_in": 5, "over": 2, "under_out": 3, "sign": 1},
            {"under_in": 2, "over": 3, "under_out": 1, "sign": 1},
            {"under_in": 3, "over": 1, "under_out": 2, "sign": 1},
            {"under_in": 1, "over": 2, "under_out": 4, "sign": )") +
                                 std::to_string(s) + R"(},
            {"under_in": 4, "over": 2, "under_out": 5, "sign": )" +
                                 std::to_string(-s) + "}]}";
        Diagram poked = parse_diagram(poked_json);
        CHECK(component_count(poked) == 1);
        CHECK(delta(present_knot(poked), 1) == expected);
    }
}

TEST_CASE("module factors") {
    LMatrix trefoil = linearize(trefoil_presentation());
    auto factors = module_factors(trefoil);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == lp("t^2 - t + 1"));
    CHECK(factors[0].second);

    CHECK(module_factors(linearize(present_knot(load_diagram("unknot.json")))).empty());

    auto two = module_factors(block_diag(trefoil, trefoil));
    REQUIRE(two.size() == 2);
    CHECK(two[0].first == lp("t^2 - t + 1"));
    CHECK(two[1].first == lp("t^2 - t + 1"));
    CHECK(two[0].second);
    CHECK(two[1].second);
}

TEST_CASE("affine colorability") {
    CHECK(affine_colorability(trefoil_presentation()).colorable);
    CHECK_FALSE(affine_colorability(present_knot(load_diagram("unknot.json"))).colorable);
    CHECK_FALSE(affine_colorability(present_knot(load_diagram("kink.json"))).colorable);

    LMatrix zero(1, 2); // delta1 = 0: colorable with a warning
    AffineColorability z = affine_colorability(zero);
    CHECK(z.colorable);
    CHECK(z.delta1_zero);
}

TEST_CASE("coloring target") {
    ColoringTarget t = coloring_target(trefoil_presentation());
    CHECK(t.delta1 == lp("t^2 - t + 1"));
    CHECK(t.j == 1);
    CHECK(t.multiplier == lp("1"));

    ColoringTarget f = coloring_target(present_knot(load_diagram("figure8.json")));
    CHECK(f.delta1 == lp("t^2 - 3t + 1"));

    CHECK_THROWS_AS(coloring_target(present_knot(load_diagram("unknot.json"))), NotColorable);
}
