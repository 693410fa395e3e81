#include "qramsey/words.hpp"

#include <numeric>

namespace qramsey {

namespace {

void check_cap(std::size_t length, std::size_t cap) {
    if (length > cap) {
        throw CapExceeded("word length " + std::to_string(length) + " exceeds cap " +
                          std::to_string(cap));
    }
}

}  // namespace

Word Word::parse(std::string_view text, std::size_t cap) {
    Word w;
    if (text == "e") return w;
    check_cap(text.size(), cap);
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("invalid word literal '" + std::string(text) + "'");
        }
    }
    w.bits_.assign(text);
    return w;
}

Word Word::repeat(int bit, std::size_t count, std::size_t cap) {
    check_cap(count, cap);
    Word w;
    w.bits_.assign(count, bit ? '1' : '0');
    return w;
}

Word Word::prefix(std::size_t length) const {
    Word w;
    w.bits_ = bits_.substr(0, length);
    return w;
}

bool Word::is_prefix_of(const Word& other) const noexcept {
    return size() <= other.size() && other.bits_.compare(0, size(), bits_) == 0;
}

Word& Word::push_back(int bit, std::size_t cap) {
    check_cap(size() + 1, cap);
    bits_.push_back(bit ? '1' : '0');
    return *this;
}

Word& Word::append(const Word& tail, std::size_t cap) {
    check_cap(size() + tail.size(), cap);
    bits_ += tail.bits_;
    return *this;
}

Word Word::operator+(const Word& tail) const {
    Word w = *this;
    w.append(tail);
    return w;
}

bool le_l(const Word& s, const Word& t) noexcept {
    if (s.size() != t.size()) return s.size() < t.size();
    return s <= t;
}

bool lt_l(const Word& s, const Word& t) noexcept {
    if (s.size() != t.size()) return s.size() < t.size();
    return s < t;
}

bool is_q(const Word& w) noexcept { return w.empty() || w.back() == 1; }

QWord::QWord(Word w) : word_(std::move(w)) {
    if (!is_q(word_)) throw DomainError("'" + word_.str() + "' is not a Q-word");
}

QWord QWord::parse(std::string_view text) { return QWord(Word::parse(text)); }

QWord q_normalize(const Word& w) {
    auto end = w.bits().find_last_of('1');
    if (end == std::string::npos) return QWord();
    return QWord(w.prefix(end + 1));
}

Word b(const Natural& n, std::size_t cap) {
    if (n < 0) throw DomainError("b: negative index");
    Natural m = n + 1;
    std::size_t length = boost::multiprecision::msb(m);
    check_cap(length, cap);
    Natural value = m - (Natural(1) << length);
    std::string bits(length, '0');
    for (std::size_t i = 0; i < length; ++i) {
        if (boost::multiprecision::bit_test(value, length - 1 - i)) bits[i] = '1';
    }
    return Word::parse(bits, cap);
}

Natural b_inverse(const Word& w) {
    Natural value = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        value <<= 1;
        value += w[i];
    }
    return (Natural(1) << w.size()) - 1 + value;
}

QWord q_predecessor(const QWord& z) {
    if (z.empty()) throw DomainError("q_predecessor of the empty word");
    const auto& bits = z.word().bits();
    if (bits.size() == 1) return QWord();
    auto last = bits.find_last_of('1', bits.size() - 2);
    if (last == std::string::npos) return QWord();
    return QWord(z.word().prefix(last + 1));
}

bool perp_less(const Word& z, const Word& t) noexcept {
    std::size_t m = std::min(z.size(), t.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (z[i] != t[i]) return z[i] < t[i];
    }
    return false;
}

Point::Point() : period_(Word::parse("0")) {}

Point::Point(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw DomainError("point period must be nonempty");
    const std::string& p = period_.bits();
    std::size_t n = p.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = p[i] == p[i - d];
        if (periodic) {
            period_ = period_.prefix(d);
            break;
        }
    }
    // Absorb trailing prefix bits into the period by rotating it.
    std::string pre = prefix_.bits();
    std::string per = period_.bits();
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        per = per.back() + per.substr(0, per.size() - 1);
    }
    prefix_ = Word::parse(pre);
    period_ = Word::parse(per);
}

Point Point::parse(std::string_view text) {
    auto open = text.find('(');
    if (open == std::string_view::npos || text.size() < open + 3 || text.back() != ')') {
        throw DomainError("invalid point literal '" + std::string(text) + "'");
    }
    std::string_view pre = text.substr(0, open);
    std::string_view per = text.substr(open + 1, text.size() - open - 2);
    if (per == "e" || per.find('(') != std::string_view::npos) {
        throw DomainError("invalid point literal '" + std::string(text) + "'");
    }
    return Point(Word::parse(pre), Word::parse(per));
}

Point Point::from_q(const QWord& w) { return Point(w.word(), Word::parse("0")); }

int Point::bit(std::size_t n) const noexcept {
    if (n < prefix_.size()) return prefix_[n];
    return period_[(n - prefix_.size()) % period_.size()];
}

bool Point::in_cylinder(const Word& s) const noexcept {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (bit(i) != s[i]) return false;
    }
    return true;
}

Word Point::unfold(std::size_t n) const {
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i) bits[i] = bit(i) ? '1' : '0';
    return Word::parse(bits, n);
}

PointClass Point::classify() const noexcept {
    return period_.bits() == "0" ? PointClass::Pf : PointClass::Pinfty;
}

QWord Point::q_word() const {
    if (!is_pf()) throw DomainError("point " + str() + " is not in P_f");
    return QWord(prefix_);
}

Point Point::shift() const {
    if (!prefix_.empty()) return Point(Word::parse(prefix_.bits().substr(1)), period_);
    const std::string& p = period_.bits();
    return Point(Word(), Word::parse(p.substr(1) + p[0]));
}

Point Point::cons(int b0) const {
    Word w;
    w.push_back(b0);
    return Point(w + prefix_, period_);
}

Point Point::flip_first() const {
    std::string w = prefix_.bits() + period_.bits();
    w[0] = w[0] == '1' ? '0' : '1';
    return Point(Word::parse(w), period_);
}

std::string Point::str() const { return prefix_.bits() + "(" + period_.bits() + ")"; }

std::strong_ordering lex_compare(const Point& x, const Point& y) {
    std::size_t bound = std::max(x.prefix().size(), y.prefix().size()) +
                        std::lcm(x.period().size(), y.period().size());
    for (std::size_t i = 0; i < bound; ++i) {
        if (x.bit(i) != y.bit(i)) return x.bit(i) <=> y.bit(i);
    }
    return std::strong_ordering::equal;
}

PointClass classify(const Point& p) noexcept { return p.classify(); }

Point alpha(const Natural& n, std::size_t cap) {
    if (n < 0) throw DomainError("alpha: negative index");
    if (n == 0) return Point();
    Word w = b(n - 1, cap);
    w.push_back(1, cap);
    return Point(w, Word::parse("0"));
}

Natural alpha_index(const QWord& q) {
    if (q.empty()) return 0;
    return b_inverse(q.word().prefix(q.size() - 1)) + 1;
}

Natural alpha_index(const Point& p) { return alpha_index(p.q_word()); }

}  // namespace qramsey
