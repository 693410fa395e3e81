#pragma once

// The coloring c({z0^infty, t0^infty}) = i(z, t) of pairs of rationals, the
// relations R_beta and G_beta built from it, and explicit witnesses for its
// range and for its triangles.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qramsey/words.hpp"

namespace qramsey {

enum class GammaTag { Sigma02, Pi02, OracleRank3 };

/// Selects the set C: P_infty for Sigma02, P_f for Pi02, or a caller-supplied
/// membership oracle.
struct GammaClass {
    GammaTag tag = GammaTag::Sigma02;
    std::function<bool(const Point&)> oracle;

    static GammaClass sigma02() { return {GammaTag::Sigma02, {}}; }
    static GammaClass pi02() { return {GammaTag::Pi02, {}}; }
    static GammaClass with_oracle(std::function<bool(const Point&)> f) {
        return {GammaTag::OracleRank3, std::move(f)};
    }
    /// "Sigma02" or "Pi02".
    static GammaClass parse(std::string_view text);
    std::string name() const;

    /// x in C. Throws ConfigError for an oracle class without oracle.
    bool contains(const Point& x) const;
};

/// beta in 2^omega, used as the predicate p -> beta(p).
struct BetaParam {
    Point beta;
    bool enabled(std::size_t p) const noexcept { return beta.bit(p) == 1; }
};

/// c({x, y}) for distinct x, y in P_f.
std::size_t color_c(const Point& x, const Point& y);

/// Distinct P_f points inside N_s with color p. Requires p >= 1.
std::pair<Point, Point> witness_pair(std::size_t p, const QWord& s);

/// Delta(C) together with the off-diagonal pairs of P_f whose color is enabled.
bool r_beta_contains(const GammaClass& g, const BetaParam& b, const Point& x, const Point& y);

using TaggedPoint = std::pair<int, Point>;

/// Symmetrization of {((0,a),(1,c)) : (a,c) in R_beta} for C = P_infty.
bool g_beta_bipartite_contains(const BetaParam& b, const TaggedPoint& u, const TaggedPoint& v);

/// R_beta minus the diagonal, for C = P_f.
bool g_beta_diagfree_contains(const BetaParam& b, const Point& x, const Point& y);

/// The words of the pairwise-color-p triangle as first written, before
/// trailing zeros are stripped.
std::array<Word, 3> cycle_witness_raw(std::size_t p);

/// Three distinct P_f points with pairwise color p. Requires p >= 1.
std::array<Point, 3> cycle_witness(std::size_t p);

/// Decidable digraph on Q-words. Consulted only on distinct arguments.
using QDigraph = std::function<bool(const QWord&, const QWord&)>;
using PointRelation = std::function<bool(const Point&, const Point&)>;

/// Delta(C) union {(s0^infty, t0^infty) : s != t, D(s, t)}.
PointRelation relation_of_digraph(const GammaClass& g, QDigraph d);

struct DiagonalVerdict {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::vector<std::string> violations;
};

/// Checks, on all pairs of samples, that R meets the diagonal exactly in
/// Delta(C) and is contained in Delta(C) union P_f^2.
DiagonalVerdict diagonally_complex_check(const GammaClass& g, const PointRelation& r,
                                         const std::vector<Point>& samples);
DiagonalVerdict diagonally_complex_check(const GammaClass& g, const QDigraph& d,
                                         const std::vector<Point>& samples);

}  // namespace qramsey
