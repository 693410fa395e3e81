#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "qramsey/antichains.hpp"

using namespace qramsey;

TEST_CASE("code literals") {
    CHECK(Code4::parse("1023").at(0, 1) == 0);
    CHECK(Code4::parse("1023").at(1, 1) == 3);
    CHECK(Code4::parse("1023").str() == "1023");
    CHECK_THROWS_AS(Code4::parse("1024"), DomainError);
    CHECK_THROWS_AS(Code4::parse("102"), DomainError);
    CHECK(Code6::parse("100001").at(0) == 1);
    CHECK(Code6::parse("100001").at(5) == 1);
    CHECK(Code6::parse("100001").at(3) == 0);
    CHECK_THROWS_AS(Code6::parse("10000"), DomainError);
    CHECK(Code6x4::parse("000000,000010,000000,000000").at(0, 1).str() == "000010");
    CHECK_THROWS_AS(Code6x4::parse("000000,000010"), DomainError);
}

TEST_CASE("family sizes") {
    CHECK(enum_P().size() == 33);
    CHECK(enum_AGamma(GammaClass::sigma02()).size() == 34);
    CHECK(enum_A().size() == 42);
    CHECK(enum_Cpi02().size() == 52);
    CHECK(enum_N().size() == 45);
    CHECK(enum_C().size() == 20);
    CHECK(enum_V().size() == 152);
    CHECK(enum_H().size() == 114);
    CHECK(enum_S().size() == 7049);
    CHECK(catalog_Ac().size() == 13);
}

TEST_CASE("enumerations are exactly the filter sets") {
    std::size_t p = 0, a = 0, n = 0, c = 0;
    for (int v = 0; v < 256; ++v) {
        Code4 t{{static_cast<std::uint8_t>(v >> 6), static_cast<std::uint8_t>((v >> 4) & 3),
                 static_cast<std::uint8_t>((v >> 2) & 3), static_cast<std::uint8_t>(v & 3)}};
        p += in_P(t);
        a += in_A(t);
    }
    for (int v = 0; v < 64; ++v) {
        n += in_N(Code6::of(static_cast<std::uint8_t>(v)));
        c += in_C(Code6::of(static_cast<std::uint8_t>(v)));
    }
    CHECK(p == enum_P().size());
    CHECK(a == enum_A().size());
    CHECK(n == enum_N().size());
    CHECK(c == enum_C().size());
    for (const auto& t : enum_V()) CHECK(in_V(t));
    for (const auto& t : enum_H()) CHECK(in_H(t));
    for (const auto& t : enum_S()) CHECK(in_S(t));
}

TEST_CASE("N membership") {
    CHECK_FALSE(in_N(Code6::parse("000000")));
    CHECK(in_N(Code6::parse("100000")));   // nonzero with t5 = 0
    CHECK_FALSE(in_N(Code6::parse("000001")));
    CHECK(in_N(Code6::parse("001001")));   // t2 without t3
    CHECK(in_N(Code6::parse("100001")));   // t0 without t4
    CHECK_FALSE(in_N(Code6::parse("100011")));
}

TEST_CASE("listings instantiate relations on the right spaces") {
    for (Family f : {Family::P, Family::A, Family::Cpi02, Family::N, Family::V, Family::H, Family::C, Family::Ac}) {
        for (const auto& e : listing(f)) {
            CHECK(!e.code.empty());
            CHECK(RelationSpec::parse(e.spec.str()).str() == e.spec.str());
        }
    }
    CHECK(listing(Family::P).front().spec.space() == Space::D2xCantor);
    CHECK(listing(Family::N).front().spec.space() == Space::Kspace);
    CHECK_THROWS_AS(instantiate(Code4::parse("3333"), Family::P), DomainError);
    CHECK_THROWS_AS(parse_family("Q"), DomainError);
    CHECK(family_name(parse_family("Cpi02")) == "Cpi02");
}

TEST_CASE("catalog entries") {
    auto cat = catalog_Ac();
    for (std::size_t k = 0; k < cat.size(); ++k) CHECK(cat[k].index == static_cast<int>(k));
    std::vector<int> graphs;
    for (const auto& e : cat) {
        if (e.graph) graphs.push_back(e.index);
    }
    CHECK(graphs == std::vector<int>{3, 7, 11});
    CHECK(cat[0].topology == Topology::Clopen);
    CHECK(cat[7].topology == Topology::OpenNotClosed);
    CHECK(cat[9].topology == Topology::ClosedNotOpen);
    for (int k = 1; k <= 6; ++k) CHECK(cat[k].spec.space() == Space::Sseq);
}

TEST_CASE("graph sub-bases") {
    GraphSubbases g = graph_subbases();
    CHECK(g.pi01_le.size() == 5);
    CHECK(g.pi01_sq.size() == 6);
    CHECK(g.sigma01.size() == 10);
    for (const auto* list : {&g.pi01_le, &g.pi01_sq, &g.sigma01}) {
        for (const auto& e : *list) CHECK(e.member);
    }
}

TEST_CASE("cardinality table") {
    auto rows = cardinality_table();
    REQUIRE(rows.size() == 15);
    CHECK(rows[0] == std::make_pair(std::string("P"), std::size_t{33}));
    CHECK(rows[11] == std::make_pair(std::string("Pi01 total"), std::size_t{7360}));
}

TEST_CASE("csv and json renderings") {
    auto entries = listing(Family::N);
    std::string csv = to_csv(entries);
    CHECK(csv.rfind("family,code,relation\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 46);
    auto doc = nlohmann::json::parse(to_json(Family::N, entries));
    CHECK(doc["count"] == 45);
    CHECK(doc["codes"].size() == 45);
}
