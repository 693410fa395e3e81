#include <doctest.h>

#include <set>

#include "qramsey/relations.hpp"

using namespace qramsey;

namespace {

Point pt(const char* text) { return Point::parse(text); }

bool holds(const char* spec, const SpacePoint& u, const SpacePoint& v) {
    return eval(RelationSpec::parse(spec), u, v);
}

}  // namespace

TEST_CASE("K points") {
    CHECK(KPoint::parse("0") == KPoint::origin());
    CHECK(KPoint::parse("2^-3") == KPoint::dyadic(3));
    CHECK(KPoint::dyadic(3).str() == "2^-3");
    CHECK_FALSE(KPoint::origin().in_c());
    CHECK_THROWS_AS(KPoint::parse("3"), DomainError);
}

TEST_CASE("space point parsing") {
    CHECK(SpacePoint::parse(Space::D2xCantor, "1:(01)") == SpacePoint::d2(1, pt("(01)")));
    CHECK(SpacePoint::parse(Space::Cantor, "1(0)") == SpacePoint::cantor(pt("1(0)")));
    CHECK_THROWS_AS(SpacePoint::parse(Space::D2xCantor, "2:(0)"), DomainError);
    CHECK_THROWS_AS(SpacePoint::sseq(pt("01(0)")), DomainError);  // neither (0) nor 1 followed by anything
    CHECK_NOTHROW(SpacePoint::sseq(pt("(0)")));
    CHECK_NOTHROW(SpacePoint::sseq(pt("1(01)")));
}

TEST_CASE("relation spec round trip") {
    for (const char* text : {"Gm:gamma=Sigma02", "Om:gamma=Pi02", "Rt_P:gamma=Sigma02,t=1001",
                             "Rbeta:gamma=Sigma02,beta=(01)", "Rank1_N:t=000110,complement=0", "Ac:i=7"}) {
        RelationSpec r = RelationSpec::parse(text);
        CHECK(RelationSpec::parse(r.str()).str() == r.str());
    }
    CHECK(RelationSpec::parse("Ac_7").ac == 7);
    CHECK(RelationSpec::parse("Rank1_V:t=000000,000010,000000,000000").id == RelId::Rank1_V);
    CHECK_THROWS_AS(RelationSpec::parse("Rt_P:gamma=Sigma02"), DomainError);
    CHECK_THROWS_AS(RelationSpec::parse("Nope"), DomainError);
    CHECK_THROWS_AS(RelationSpec::parse("Gm:beta=(0)"), DomainError);
    CHECK_THROWS_AS(RelationSpec::parse("Ac_13"), DomainError);
}

TEST_CASE("Gm joins the two copies of a Gamma point") {
    auto a0 = SpacePoint::d2(0, pt("1(0)")), a1 = SpacePoint::d2(1, pt("1(0)"));
    auto b0 = SpacePoint::d2(0, pt("(01)")), b1 = SpacePoint::d2(1, pt("(01)"));
    CHECK(holds("Gm:gamma=Sigma02", b0, b1));
    CHECK_FALSE(holds("Gm:gamma=Sigma02", a0, a1));
    CHECK(holds("Gm:gamma=Pi02", a0, a1));
    CHECK_FALSE(holds("Gm:gamma=Sigma02", b0, b0));
    CHECK(holds("Om:gamma=Sigma02", b0, b1));
    CHECK_FALSE(holds("Om:gamma=Sigma02", b1, b0));
    CHECK_THROWS_AS(holds("Gm:gamma=Sigma02", SpacePoint::cantor(pt("(0)")), a0), DomainError);
}

TEST_CASE("E3 is an equivalence relation") {
    RelationSpec r = RelationSpec::parse("E3:gamma=Sigma02");
    Profile p = structural_profile(r, standard_vertices(Space::D2xCantor));
    CHECK(p.reflexive);
    CHECK(p.symmetric);
    CHECK(p.transitive);
}

TEST_CASE("Rt_P reads the code cell of the tag pair") {
    auto a0 = SpacePoint::d2(0, pt("1(0)")), a1 = SpacePoint::d2(1, pt("1(0)"));
    CHECK(holds("Rt_P:gamma=Pi02,t=3010", a0, a1));
    CHECK_FALSE(holds("Rt_P:gamma=Pi02,t=3010", a1, a0));
    CHECK_FALSE(holds("Rt_P:gamma=Pi02,t=3333", a0, SpacePoint::d2(1, pt("11(0)"))));
}

TEST_CASE("R_D uses the Gamma diagonal and the digraph off it") {
    auto x = SpacePoint::cantor(pt("1(0)")), y = SpacePoint::cantor(pt("01(0)"));
    CHECK_FALSE(holds("R_D:gamma=Sigma02,d=empty", x, y));
    CHECK(holds("R_D:gamma=Sigma02,d=full", x, y));
    CHECK(holds("R_D:gamma=Pi02,d=empty", x, x));
    CHECK_FALSE(holds("R_D:gamma=Sigma02,d=empty", x, x));
    CHECK(holds("R_D:gamma=Sigma02,d=beta,beta=001(0)", x, y));  // color 2
    CHECK_FALSE(holds("R_D:gamma=Sigma02,d=beta,beta=01(0)", x, y));
}

TEST_CASE("K cells and rank-one relations") {
    CHECK(kcell(KPoint::dyadic(3), KPoint::dyadic(1)) == 0);
    std::set<int> cells;
    for (auto a : {KPoint::origin(), KPoint::dyadic(0), KPoint::dyadic(1), KPoint::dyadic(2)}) {
        for (auto b : {KPoint::origin(), KPoint::dyadic(0), KPoint::dyadic(1), KPoint::dyadic(2)}) {
            int c = kcell(a, b);
            CHECK(c >= 0);
            CHECK(c <= 5);
            cells.insert(c);
        }
    }
    CHECK(cells.size() == 6);
    auto o = SpacePoint::kspace(KPoint::origin());
    CHECK(holds("Rank1_N:t=000001", o, o));
    CHECK_FALSE(holds("Rank1_N:t=000001,complement=1", o, o));
}

TEST_CASE("cycle search") {
    std::vector<std::vector<std::size_t>> tree{{1, 2}, {0}, {0}};
    CHECK_FALSE(find_cycle(3, tree));
    std::vector<std::vector<std::size_t>> tri{{1, 2}, {0, 2}, {0, 1}};
    auto c = find_cycle(3, tri);
    REQUIRE(c);
    CHECK(c->size() == 3);
}

TEST_CASE("standard vertex sets") {
    CHECK(standard_vertices(Space::Cantor).size() == standard_points().size());
    CHECK(standard_vertices(Space::D2xCantor).size() == 2 * standard_points().size());
    CHECK(standard_vertices(Space::Sseq).size() == standard_points().size() + 1);
    auto pts = standard_points();
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) CHECK_FALSE(pts[a] == pts[b]);
    }
    CHECK(k_vertices(Space::Kspace, 5).size() == 7);
}

TEST_CASE("acyclicity of the graph Gm") {
    RelationSpec r = RelationSpec::parse("Gm:gamma=Sigma02");
    CHECK_FALSE(acyclicity_check(r, standard_vertices(Space::D2xCantor)));
    RelationSpec full = RelationSpec::parse("Ac_0");
    CHECK(acyclicity_check(full, standard_vertices(full.space())));
}
