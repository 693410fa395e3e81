#include "qramsey/coloring.hpp"

#include "qramsey/oscillation.hpp"

namespace qramsey {

namespace {

Word w(std::string_view bits) { return Word::parse(bits); }

Word repeat_word(std::string_view unit, std::size_t count) {
    Word out;
    for (std::size_t k = 0; k < count; ++k) out.append(w(unit));
    return out;
}

Point pf_point(const Word& raw) { return Point::from_q(q_normalize(raw)); }

}  // namespace

GammaClass GammaClass::parse(std::string_view text) {
    if (text == "Sigma02") return sigma02();
    if (text == "Pi02") return pi02();
    throw DomainError("unknown gamma class '" + std::string(text) + "' (expected Sigma02 or Pi02)");
}

std::string GammaClass::name() const {
    switch (tag) {
        case GammaTag::Sigma02:
            return "Sigma02";
        case GammaTag::Pi02:
            return "Pi02";
        case GammaTag::OracleRank3:
            return "OracleRank3";
    }
    return "";
}

bool GammaClass::contains(const Point& x) const {
    switch (tag) {
        case GammaTag::Sigma02:
            return !x.is_pf();
        case GammaTag::Pi02:
            return x.is_pf();
        case GammaTag::OracleRank3:
            if (!oracle) throw ConfigError("rank-3 gamma class requires a membership oracle");
            return oracle(x);
    }
    return false;
}

std::size_t color_c(const Point& x, const Point& y) {
    if (!x.is_pf() || !y.is_pf()) throw DomainError("color_c: points must lie in P_f");
    if (x == y) throw DomainError("color_c: points must be distinct");
    return invariant_i(x.q_word(), y.q_word());
}

std::pair<Point, Point> witness_pair(std::size_t p, const QWord& s) {
    if (p == 0) throw DomainError("witness_pair: color 0 is not attained on distinct pairs");
    const std::size_t k = p / 2;
    Word z = s.word() + w("1");
    Word t = s.word() + w("1") + repeat_word("01", k);
    if (p % 2 == 1) {
        z.append(repeat_word("10", k + 1));
        z.append(w("1"));
    } else {
        z.append(repeat_word("10", k - 1));
        z.append(w("1"));
    }
    return {pf_point(z), pf_point(t)};
}

bool r_beta_contains(const GammaClass& g, const BetaParam& b, const Point& x, const Point& y) {
    if (x == y) return g.contains(x);
    if (g.tag == GammaTag::OracleRank3 && !g.oracle) {
        throw ConfigError("rank-3 gamma class requires a membership oracle");
    }
    if (!x.is_pf() || !y.is_pf()) return false;
    return b.enabled(color_c(x, y));
}

bool g_beta_bipartite_contains(const BetaParam& b, const TaggedPoint& u, const TaggedPoint& v) {
    if (u.first == v.first) return false;
    const TaggedPoint& zero = u.first == 0 ? u : v;
    const TaggedPoint& one = u.first == 0 ? v : u;
    return r_beta_contains(GammaClass::sigma02(), b, zero.second, one.second);
}

bool g_beta_diagfree_contains(const BetaParam& b, const Point& x, const Point& y) {
    if (x == y) return false;
    return r_beta_contains(GammaClass::pi02(), b, x, y);
}

std::array<Word, 3> cycle_witness_raw(std::size_t p) {
    if (p == 0) throw DomainError("cycle_witness: p must be positive");
    if (p == 1) return {Word(), w("1"), w("11")};
    if (p == 2) return {w("1"), w("01"), w("001")};
    if (p % 2 == 1) {
        const std::size_t k = (p - 3) / 2;
        return {w("10") + Word::repeat(1, k + 1), Word::repeat(1, k + 3), w("010") + Word::repeat(1, k)};
    }
    const std::size_t k = (p - 4) / 2;
    return {w("010110") + repeat_word("110", k), w("101000") + repeat_word("100", k),
            w("010011") + repeat_word("101", k)};
}

std::array<Point, 3> cycle_witness(std::size_t p) {
    auto raw = cycle_witness_raw(p);
    return {pf_point(raw[0]), pf_point(raw[1]), pf_point(raw[2])};
}

PointRelation relation_of_digraph(const GammaClass& g, QDigraph d) {
    return [g, d = std::move(d)](const Point& x, const Point& y) {
        if (x == y) return g.contains(x);
        if (!x.is_pf() || !y.is_pf()) return false;
        return d(x.q_word(), y.q_word());
    };
}

DiagonalVerdict diagonally_complex_check(const GammaClass& g, const PointRelation& r,
                                         const std::vector<Point>& samples) {
    DiagonalVerdict v;
    for (const auto& x : samples) {
        for (const auto& y : samples) {
            ++v.pairs_checked;
            bool related = r(x, y);
            if (x == y) {
                if (related != g.contains(x)) {
                    v.violations.push_back("diagonal at " + x.str() + (related ? " outside C" : " missing"));
                }
            } else if (related && !(x.is_pf() && y.is_pf())) {
                v.violations.push_back("off-diagonal pair (" + x.str() + ", " + y.str() + ") outside P_f^2");
            }
        }
    }
    v.pass = v.violations.empty();
    return v;
}

DiagonalVerdict diagonally_complex_check(const GammaClass& g, const QDigraph& d,
                                         const std::vector<Point>& samples) {
    return diagonally_complex_check(g, relation_of_digraph(g, d), samples);
}

}  // namespace qramsey
