#pragma once

// Finite binary words, the Q-normal form of eventually-zero sequences, the
// length-lex enumeration of 2^<omega and eventually periodic points of Cantor
// space.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qramsey/errors.hpp"

namespace qramsey {

using Natural = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultWordCap = 4096;

/// A finite binary sequence. Bits are stored as the characters '0' / '1', so
/// the natural string order is the lexicographic order with a strict prefix
/// ranked below its extensions.
class Word {
public:
    Word() = default;

    /// Accepts a string over {0,1}; "e" denotes the empty word.
    static Word parse(std::string_view text, std::size_t cap = kDefaultWordCap);

    /// `count` copies of `bit`.
    static Word repeat(int bit, std::size_t count, std::size_t cap = kDefaultWordCap);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int operator[](std::size_t i) const noexcept { return bits_[i] == '1' ? 1 : 0; }
    int back() const noexcept { return (*this)[size() - 1]; }

    Word prefix(std::size_t length) const;
    bool is_prefix_of(const Word& other) const noexcept;

    Word& push_back(int bit, std::size_t cap = kDefaultWordCap);
    Word& append(const Word& tail, std::size_t cap = kDefaultWordCap);
    Word operator+(const Word& tail) const;

    /// Bits as '0'/'1' characters, empty for the empty word.
    const std::string& bits() const noexcept { return bits_; }
    /// Text form: the bits, or "e" for the empty word.
    std::string str() const { return empty() ? std::string("e") : bits_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
        return a.bits_.compare(b.bits_) <=> 0;
    }

private:
    std::string bits_;
};

/// Lexicographic order on words of possibly different lengths; a strict
/// prefix is smaller.
inline bool lex_less(const Word& s, const Word& t) noexcept { return s < t; }

/// s <=_l t  iff  |s| < |t|, or |s| = |t| and s <=_lex t.
bool le_l(const Word& s, const Word& t) noexcept;
/// Strict version of le_l.
bool lt_l(const Word& s, const Word& t) noexcept;

struct LengthLexLess {
    bool operator()(const Word& s, const Word& t) const noexcept { return lt_l(s, t); }
};

/// Empty, or ending with 1. Names the point w0^infty.
class QWord {
public:
    QWord() = default;
    /// Throws DomainError unless `w` is empty or ends in 1.
    explicit QWord(Word w);
    static QWord parse(std::string_view text);

    const Word& word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }
    std::string str() const { return word_.str(); }

    friend bool operator==(const QWord&, const QWord&) = default;
    friend std::strong_ordering operator<=>(const QWord& a, const QWord& b) noexcept {
        return a.word_ <=> b.word_;
    }

private:
    Word word_;
};

bool is_q(const Word& w) noexcept;

/// Strips trailing zeros: w0^infty = q_normalize(w)0^infty.
QWord q_normalize(const Word& w);

/// Increasing bijection (omega, <=) -> (2^<omega, <=_l).
Word b(const Natural& n, std::size_t cap = kDefaultWordCap);
Natural b_inverse(const Word& w);

/// z^- : the longest proper prefix of z lying in Q. Requires z nonempty.
QWord q_predecessor(const QWord& z);

/// Some i < min(|z|,|t|) with z|i = t|i and z(i) < t(i).
bool perp_less(const Word& z, const Word& t) noexcept;

enum class PointClass { Pf, Pinfty };

/// An eventually periodic element of 2^omega, kept in canonical form: the
/// period is primitive and the prefix is as short as possible. Equality of
/// canonical forms is equality of the denoted sequences.
class Point {
public:
    /// 0^infty.
    Point();
    Point(Word prefix, Word period);

    /// `<word>(<word>)`, e.g. "(0)", "1(0)", "(01)".
    static Point parse(std::string_view text);
    /// w0^infty.
    static Point from_q(const QWord& w);

    const Word& prefix() const noexcept { return prefix_; }
    const Word& period() const noexcept { return period_; }

    int bit(std::size_t n) const noexcept;
    /// Membership in the cylinder N_s.
    bool in_cylinder(const Word& s) const noexcept;
    /// First `n` bits.
    Word unfold(std::size_t n) const;

    PointClass classify() const noexcept;
    bool is_pf() const noexcept { return classify() == PointClass::Pf; }
    /// The Q-word t with this = t0^infty. Throws DomainError on P_infty.
    QWord q_word() const;

    /// Drops the first bit (alpha for a point of the form e.alpha).
    Point shift() const;
    /// Prepends a bit.
    Point cons(int bit) const;
    /// Flips the first bit.
    Point flip_first() const;

    std::string str() const;

    friend bool operator==(const Point&, const Point&) = default;

private:
    Word prefix_;
    Word period_;
};

/// Lexicographic order on 2^omega.
std::strong_ordering lex_compare(const Point& x, const Point& y);

/// Total order used for containers (not the lexicographic order).
struct PointLess {
    bool operator()(const Point& x, const Point& y) const noexcept {
        if (x.prefix() != y.prefix()) return x.prefix() < y.prefix();
        return x.period() < y.period();
    }
};

PointClass classify(const Point& p) noexcept;

/// alpha_0 = 0^infty, alpha_{n+1} = b(n)10^infty.
Point alpha(const Natural& n, std::size_t cap = kDefaultWordCap);
/// Inverse of alpha on P_f. Throws DomainError for P_infty points.
Natural alpha_index(const Point& p);
/// Index of the point q0^infty.
Natural alpha_index(const QWord& q);

}  // namespace qramsey

template <>
struct std::hash<qramsey::Word> {
    std::size_t operator()(const qramsey::Word& w) const noexcept {
        return std::hash<std::string>{}(w.bits());
    }
};

template <>
struct std::hash<qramsey::QWord> {
    std::size_t operator()(const qramsey::QWord& w) const noexcept {
        return std::hash<qramsey::Word>{}(w.word());
    }
};
