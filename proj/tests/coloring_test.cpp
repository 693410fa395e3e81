#include <doctest.h>

#include "qramsey/coloring.hpp"
#include "qramsey/oscillation.hpp"

using namespace qramsey;

namespace {

Point pt(const char* text) { return Point::parse(text); }

BetaParam beta_of(std::initializer_list<std::size_t> colors) {
    Word w = Word::repeat(0, 64);
    std::string bits = w.bits();
    for (auto c : colors) bits[c] = '1';
    return {Point(Word::parse(bits), Word::parse("0"))};
}

}  // namespace

TEST_CASE("gamma classes") {
    GammaClass s = GammaClass::sigma02(), p = GammaClass::pi02();
    CHECK(s.contains(pt("(01)")));
    CHECK_FALSE(s.contains(pt("101(0)")));
    CHECK(p.contains(pt("1(0)")));
    CHECK_FALSE(p.contains(pt("(01)")));
    CHECK(GammaClass::parse("Sigma02").name() == "Sigma02");
    CHECK(GammaClass::parse("Pi02").name() == "Pi02");
    CHECK_THROWS_AS(GammaClass::parse("Delta03"), DomainError);
    GammaClass bare{GammaTag::OracleRank3, {}};
    CHECK_THROWS_AS(bare.contains(pt("(0)")), ConfigError);
    GammaClass oracle = GammaClass::with_oracle([](const Point& x) { return x.bit(0) == 1; });
    CHECK(oracle.contains(pt("(1)")));
}

TEST_CASE("color of pairs is the invariant of their Q-words") {
    CHECK(color_c(pt("(0)"), pt("1(0)")) == 1);
    CHECK(color_c(pt("1(0)"), pt("01(0)")) == 2);
    CHECK(color_c(pt("01(0)"), pt("101(0)")) == 3);
    CHECK(color_c(pt("1(0)"), pt("01(0)")) == color_c(pt("01(0)"), pt("1(0)")));
    CHECK_THROWS_AS(color_c(pt("1(0)"), pt("1(0)")), DomainError);
    CHECK_THROWS_AS(color_c(pt("(01)"), pt("1(0)")), DomainError);
}

TEST_CASE("witness pairs hit every color inside every cylinder") {
    for (std::size_t p = 1; p <= 20; ++p) {
        for (const auto& s : q_words_upto(4)) {
            auto [x, y] = witness_pair(p, s);
            CHECK(x.in_cylinder(s.word()));
            CHECK(y.in_cylinder(s.word()));
            CHECK(color_c(x, y) == p);
        }
    }
    CHECK_THROWS_AS(witness_pair(0, QWord()), DomainError);
}

TEST_CASE("R_beta membership") {
    BetaParam odd = beta_of({1, 3, 5});
    GammaClass s = GammaClass::sigma02();
    CHECK(r_beta_contains(s, odd, pt("(0)"), pt("1(0)")));
    CHECK_FALSE(r_beta_contains(s, odd, pt("1(0)"), pt("01(0)")));
    CHECK(r_beta_contains(s, odd, pt("(01)"), pt("(01)")));          // diagonal point of P_infinity
    CHECK_FALSE(r_beta_contains(s, odd, pt("1(0)"), pt("1(0)")));    // diagonal point outside it
    CHECK_FALSE(r_beta_contains(s, odd, pt("(01)"), pt("1(0)")));    // off P_f
}

TEST_CASE("bipartite and diagonal-free graphs") {
    BetaParam one = beta_of({1});
    CHECK(g_beta_bipartite_contains(one, {0, pt("(0)")}, {1, pt("1(0)")}));
    CHECK(g_beta_bipartite_contains(one, {1, pt("1(0)")}, {0, pt("(0)")}));
    CHECK_FALSE(g_beta_bipartite_contains(one, {0, pt("(0)")}, {0, pt("1(0)")}));
    CHECK_FALSE(g_beta_bipartite_contains(one, {0, pt("1(0)")}, {1, pt("1(0)")}));
    CHECK(g_beta_bipartite_contains(one, {0, pt("(01)")}, {1, pt("(01)")}));
    CHECK_FALSE(g_beta_diagfree_contains(one, pt("1(0)"), pt("1(0)")));
    CHECK(g_beta_diagfree_contains(one, pt("(0)"), pt("1(0)")));
}

TEST_CASE("cycle witnesses are monochromatic triangles") {
    CHECK(cycle_witness_raw(1)[0].empty());
    CHECK(cycle_witness_raw(3)[1].str() == "111");
    CHECK(cycle_witness_raw(4)[0].str() == "010110");
    for (std::size_t p = 1; p <= 30; ++p) {
        auto tri = cycle_witness(p);
        CHECK(color_c(tri[0], tri[1]) == p);
        CHECK(color_c(tri[1], tri[2]) == p);
        CHECK(color_c(tri[0], tri[2]) == p);
    }
    CHECK_THROWS_AS(cycle_witness(0), DomainError);
}

TEST_CASE("relations from digraphs are diagonally complex") {
    std::vector<Point> samples;
    for (int n = 0; n < 12; ++n) samples.push_back(alpha(n));
    samples.push_back(pt("(01)"));
    samples.push_back(pt("(1)"));
    QDigraph full = [](const QWord&, const QWord&) { return true; };
    for (const auto& g : {GammaClass::sigma02(), GammaClass::pi02()}) {
        auto v = diagonally_complex_check(g, full, samples);
        CHECK(v.pass);
        CHECK(v.pairs_checked == samples.size() * samples.size());
    }
    PointRelation bad = [](const Point&, const Point&) { return true; };
    auto v = diagonally_complex_check(GammaClass::sigma02(), bad, samples);
    CHECK_FALSE(v.pass);
    CHECK(!v.violations.empty());
}
