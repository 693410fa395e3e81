#include <doctest.h>

#include <set>

#include "qramsey/words.hpp"

using namespace qramsey;

TEST_CASE("word parsing accepts binary text and e") {
    CHECK(Word::parse("e").empty());
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("0110").size() == 4);
    CHECK(Word::parse("0110").str() == "0110");
    CHECK(Word().str() == "e");
    CHECK_THROWS_AS(Word::parse("012"), DomainError);
    CHECK_THROWS_AS(Word::parse("1e"), DomainError);
}

TEST_CASE("word length cap is enforced") {
    CHECK_NOTHROW(Word::repeat(1, kDefaultWordCap));
    CHECK_THROWS_AS(Word::repeat(1, kDefaultWordCap + 1), CapExceeded);
    Word w = Word::repeat(0, kDefaultWordCap);
    CHECK_THROWS_AS(w.push_back(1), CapExceeded);
    CHECK_THROWS_AS(Word::parse("0101", 3), CapExceeded);
}

TEST_CASE("lexicographic and length-lexicographic orders") {
    Word a = Word::parse("01"), b = Word::parse("1"), c = Word::parse("010");
    CHECK(lex_less(a, b));
    CHECK(lex_less(a, c));  // strict prefix is smaller
    CHECK(lt_l(b, a));
    CHECK(lt_l(a, c));
    CHECK(le_l(a, a));
    CHECK_FALSE(lt_l(a, a));
    CHECK(lt_l(Word(), b));
}

TEST_CASE("Q-words") {
    CHECK(is_q(Word()));
    CHECK(is_q(Word::parse("001")));
    CHECK_FALSE(is_q(Word::parse("10")));
    CHECK_THROWS_AS(QWord(Word::parse("10")), DomainError);
    CHECK(q_normalize(Word::parse("10100")).str() == "101");
    CHECK(q_normalize(Word::parse("000")).empty());
}

TEST_CASE("b enumerates words in length-lex order") {
    CHECK(b(0).str() == "e");
    CHECK(b(1).str() == "0");
    CHECK(b(2).str() == "1");
    CHECK(b(3).str() == "00");
    CHECK(b(5).str() == "10");
    CHECK(b(6).str() == "11");
    for (int n = 0; n < 2000; ++n) {
        CHECK(b_inverse(b(n)) == n);
        if (n > 0) CHECK(lt_l(b(n - 1), b(n)));
    }
}

TEST_CASE("q predecessor drops the last 1 and trailing zeros") {
    CHECK(q_predecessor(QWord::parse("1")).empty());
    CHECK(q_predecessor(QWord::parse("1001")).str() == "1");
    CHECK(q_predecessor(QWord::parse("0001")).empty());
    CHECK(q_predecessor(QWord::parse("1101")).str() == "11");
    CHECK_THROWS_AS(q_predecessor(QWord()), DomainError);
}

TEST_CASE("perp order is the first-difference order") {
    CHECK(perp_less(Word::parse("01"), Word::parse("1")));
    CHECK(perp_less(Word::parse("001"), Word::parse("01")));
    CHECK_FALSE(perp_less(Word::parse("1"), Word::parse("11")));  // prefix, no difference
    CHECK_FALSE(perp_less(Word::parse("1"), Word::parse("01")));
}

TEST_CASE("points have canonical form") {
    Point a = Point::parse("1(01)");
    Point b = Point::parse("(10)");
    CHECK(a == b);
    CHECK(Point::parse("0(0)") == Point());
    CHECK(Point::parse("11(0)").str() == "11(0)");
    CHECK(Point::parse("(0101)").period().str() == "01");
    CHECK(Point(Word::parse("1"), Word::parse("1")) == Point::parse("(1)"));
    CHECK_THROWS_AS(Point::parse("10"), DomainError);
    CHECK_THROWS_AS(Point::parse("1()"), DomainError);
}

TEST_CASE("point bits, cylinders and unfolding") {
    Point p = Point::parse("1(01)");
    CHECK(p.unfold(6).str() == "101010");
    CHECK(p.bit(0) == 1);
    CHECK(p.bit(101) == 0);
    CHECK(p.in_cylinder(Word::parse("1010")));
    CHECK_FALSE(p.in_cylinder(Word::parse("11")));
    CHECK(p.shift() == Point::parse("(01)"));
    CHECK(p.cons(0).unfold(3).str() == "010");
    CHECK(p.flip_first().unfold(3).str() == "001");
}

TEST_CASE("P_f classification and Q-word round trip") {
    CHECK(Point::parse("101(0)").is_pf());
    CHECK_FALSE(Point::parse("(01)").is_pf());
    CHECK(Point::parse("101(0)").q_word().str() == "101");
    CHECK(Point::from_q(QWord::parse("011")).str() == "011(0)");
    CHECK_THROWS_AS(Point::parse("(1)").q_word(), DomainError);
}

TEST_CASE("lexicographic comparison of points") {
    CHECK(lex_compare(Point::parse("(01)"), Point::parse("(10)")) == std::strong_ordering::less);
    CHECK(lex_compare(Point::parse("1(0)"), Point::parse("0(1)")) == std::strong_ordering::greater);
    CHECK(lex_compare(Point::parse("(011)"), Point::parse("011(011)")) == std::strong_ordering::equal);
    CHECK(lex_compare(Point::parse("(01)"), Point::parse("(011)")) == std::strong_ordering::less);
}

TEST_CASE("alpha enumerates P_f") {
    CHECK(alpha(0) == Point());
    CHECK(alpha(1).str() == "1(0)");
    CHECK(alpha(2).str() == "01(0)");
    CHECK(alpha(3).str() == "11(0)");
    std::set<std::string> seen;
    for (int n = 0; n < 1024; ++n) {
        Point p = alpha(n);
        CHECK(p.is_pf());
        CHECK(alpha_index(p) == n);
        seen.insert(p.str());
    }
    CHECK(seen.size() == 1024);
    CHECK_THROWS_AS(alpha_index(Point::parse("(01)")), DomainError);
}
