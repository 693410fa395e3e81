#include <doctest.h>

#include <thread>

#include "qramsey/oscillation.hpp"

using namespace qramsey;

namespace {

std::size_t i_of(const char* z, const char* t) { return invariant_i(QWord::parse(z), QWord::parse(t)); }

}  // namespace

TEST_CASE("invariant on small pairs") {
    CHECK(i_of("e", "e") == 0);
    CHECK(i_of("e", "1") == 1);
    CHECK(i_of("1", "e") == 1);
    CHECK(i_of("1", "01") == 2);
    CHECK(i_of("101", "111") == 3);
    CHECK(i_of("01", "101") == 3);
    CHECK(i_of("01", "111") == 3);
    CHECK(i_of("11", "1") == 1);
}

TEST_CASE("invariant is zero exactly on the diagonal") {
    for (const auto& z : q_words_upto(6)) {
        CHECK(invariant_i(z, z) == 0);
    }
    for (const auto& z : q_words_upto(5)) {
        for (const auto& t : q_words_upto(5)) {
            if (!(z == t)) CHECK(invariant_i(z, t) >= 1);
        }
    }
}

TEST_CASE("trace records one rule per step") {
    std::vector<int> rules;
    std::size_t v = invariant_i_trace(QWord::parse("01"), QWord::parse("101"), &rules);
    CHECK(v == 3);
    CHECK(!rules.empty());
    for (int r : rules) CHECK(r >= 1);
}

TEST_CASE("dispatch rejects fact sets with no matching case") {
    StepFacts f;
    f.lz = f.lt = 2;
    f.lzm = f.ltm = 1;
    f.cmp_zm_tm = 0;  // equal predecessors force z = t, which the driver never passes here
    CHECK_THROWS_AS(dispatch(f), DefectError);
}

TEST_CASE("packed table agrees with the recursion") {
    InvariantTable table(8);
    CHECK(table.count() == 256);
    CHECK(InvariantTable::word_of(0).empty());
    CHECK(InvariantTable::word_of(1).str() == "1");
    CHECK(InvariantTable::word_of(2).str() == "01");
    CHECK(InvariantTable::word_of(3).str() == "11");
    for (std::size_t a = 0; a < table.count(); a += 7) {
        for (std::size_t b = 0; b < table.count(); b += 5) {
            CHECK(table.at(a, b) == invariant_i(InvariantTable::word_of(a), InvariantTable::word_of(b)));
        }
    }
    CHECK(table.at(QWord::parse("01"), QWord::parse("101")) == 3);
    CHECK_THROWS_AS(table.at(QWord::parse("100000001"), QWord()), DomainError);
    CHECK_THROWS_AS(InvariantTable(14), DomainError);
}

TEST_CASE("memo is safe under concurrent readers") {
    InvariantMemo memo;
    auto work = [&memo] {
        for (const auto& z : q_words_upto(4)) {
            for (const auto& t : q_words_upto(4)) memo.get(z, t);
        }
    };
    std::thread a(work), b(work);
    a.join();
    b.join();
    CHECK(memo.size() == 16 * 16);
    CHECK(memo.get(QWord::parse("1"), QWord::parse("01")) == 2);
}

TEST_CASE("oscillation counts same-side runs") {
    CHECK(osc(Word(), Word()) == 0);
    CHECK(osc(Word::parse("1"), Word()) == 1);
    CHECK(osc(Word::parse("10"), Word::parse("01")) == 2);
    CHECK(osc(Word::parse("11"), Word::parse("00")) == 1);
    CHECK(osc(Word::parse("1010"), Word::parse("0101")) == 4);
    CHECK(osc(Word::parse("1001"), Word::parse("0000")) == 1);
}

TEST_CASE("q_words_upto lists Q-words in length-lex order") {
    auto ws = q_words_upto(3);
    CHECK(ws.size() == 8);
    for (std::size_t k = 1; k < ws.size(); ++k) CHECK(lt_l(ws[k - 1].word(), ws[k].word()));
    CHECK(ws.back().str() == "111");
}

TEST_CASE("suff_check preconditions") {
    SuffAssignment a;
    a.depth = 1;
    a.table = {{QWord(), QWord()}};
    CHECK_THROWS_AS(suff_check(a), PreconditionError);

    a.table = {{QWord(), QWord::parse("11")}, {QWord::parse("1"), QWord::parse("1")}};
    try {
        suff_check(a);
        FAIL("expected precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(e.clause() == "a");
    }

    a.table = {{QWord(), QWord::parse("1")}, {QWord::parse("1"), QWord::parse("001")}};
    try {
        suff_check(a);
        FAIL("expected precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(e.clause() == "b");
    }
}

TEST_CASE("suff_check on a valid table") {
    SuffAssignment a;
    a.depth = 2;
    a.table = {{QWord(), QWord()},
               {QWord::parse("1"), QWord::parse("1")},
               {QWord::parse("01"), QWord::parse("011")},
               {QWord::parse("11"), QWord::parse("1011")}};
    SuffVerdict v = suff_check(a);
    CHECK(v.pass);
    CHECK(v.pairs_checked == 16);
}
