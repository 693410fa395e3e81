#pragma once

// Membership evaluators for the concrete relations: the rank >= 2 examples on
// D, S and 2^omega, the rank-one relations on K, L, M and 2 x K, and the
// thirteen-entry catalog of uncountable analytic relations. Also structural
// profiling and an acyclicity checker over finite vertex sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qramsey/codes.hpp"
#include "qramsey/coloring.hpp"
#include "qramsey/words.hpp"

namespace qramsey {

/// Element of K = {0} union {2^-k : k in omega}.
struct KPoint {
    bool zero = true;
    std::uint32_t k = 0;  // exponent, meaningful when !zero

    static KPoint origin() { return {true, 0}; }
    static KPoint dyadic(std::uint32_t k) { return {false, k}; }
    /// "0" or "2^-<k>".
    static KPoint parse(std::string_view text);
    std::string str() const;
    /// Membership in C = K \ {0}.
    bool in_c() const noexcept { return !zero; }

    friend bool operator==(const KPoint& a, const KPoint& b) noexcept {
        return a.zero == b.zero && (a.zero || a.k == b.k);
    }
};

/// Ambient spaces: 2^omega, D = 2 x 2^omega, S = {0^infty} union N_1, K,
/// 2 x K, L = (not C) + K and M = K + (not C).
enum class Space { Cantor, D2xCantor, Sseq, Kspace, D2xK, Lspace, Mspace };

std::string space_name(Space s);

struct SpacePoint {
    Space space = Space::Cantor;
    int tag = -1;  // 0 or 1 on tagged spaces, -1 otherwise
    Point point;   // Cantor-type spaces
    KPoint kpoint; // K-type spaces

    static SpacePoint cantor(Point p);
    static SpacePoint d2(int tag, Point p);
    static SpacePoint sseq(Point p);
    static SpacePoint kspace(KPoint k);
    static SpacePoint d2k(int tag, KPoint k);
    static SpacePoint lspace(int tag, KPoint k);
    static SpacePoint mspace(int tag, KPoint k);

    /// Literal in the given space: "<point>", "<bit>:<point>", "<kpoint>" or
    /// "<bit>:<kpoint>".
    static SpacePoint parse(Space space, std::string_view text);
    std::string str() const;

    friend bool operator==(const SpacePoint& a, const SpacePoint& b) {
        return a.space == b.space && a.tag == b.tag && a.point == b.point && a.kpoint == b.kpoint;
    }
};

/// j in {0,1,2,3} with x in S_j, where S_0 = C, S_1 = empty, S_2 = not C and
/// S_3 = 2^omega. Returns 0 or 2.
int diag_class(const GammaClass& g, const Point& x);
bool in_diag_set(const GammaClass& g, int j, const Point& x);

/// Index of the cell of the six-cell partition of K^2 containing (x, y).
int kcell(const KPoint& x, const KPoint& y) noexcept;

enum class RelId {
    E3, Gm, GmA, Om, Rt_P, RtA_A, Rbeta, GbetaBip, GbetaDiag, R_D,
    Rank1_N, Rank1_V, Rank1_H, Rank1_S, Tj, R01_0, R01_1, Ac
};

/// Named digraphs on Q usable in R_D specs.
enum class DigraphKind { Empty, Full, Beta };

struct RelationSpec {
    RelId id = RelId::E3;
    GammaClass gamma = GammaClass::sigma02();
    Code4 code4;
    Code6 code6;
    Code6x4 code6x4;
    BetaParam beta{Point()};
    DigraphKind digraph = DigraphKind::Empty;
    int j0 = 0, j1 = 1;
    bool complement = false;
    int ac = 0;

    /// `<id>[:<key>=<value>,...]`.
    static RelationSpec parse(std::string_view text);
    std::string str() const;
    Space space() const noexcept;
};

/// (u, v) in r. Throws DomainError when u or v is not in r's ambient space.
bool eval(const RelationSpec& r, const SpacePoint& u, const SpacePoint& v);

struct Profile {
    bool reflexive = true;
    bool irreflexive = true;
    bool symmetric = true;
    bool antisymmetric = true;
    bool transitive = true;

    friend bool operator==(const Profile&, const Profile&) = default;
};

/// Exhaustive verdicts over the vertex set.
Profile structural_profile(const RelationSpec& r, const std::vector<SpacePoint>& vertices);

/// A cycle of length >= 3 in the graph of s(r) minus the diagonal, if any.
std::optional<std::vector<SpacePoint>> acyclicity_check(const RelationSpec& r,
                                                        const std::vector<SpacePoint>& vertices);

/// Same check on an explicit adjacency relation over vertex indices.
std::optional<std::vector<std::size_t>> find_cycle(std::size_t n,
                                                   const std::vector<std::vector<std::size_t>>& adjacency);

/// {alpha_n : n <= 20} union {(01), (10), 1(01)}.
std::vector<Point> standard_points();
/// Standard vertices lifted to the space (S uses {0^infty} union {1v}).
std::vector<SpacePoint> standard_vertices(Space space);
/// K truncated to {0} union {2^-k : k <= max_k}, lifted to the space.
std::vector<SpacePoint> k_vertices(Space space, std::uint32_t max_k);

}  // namespace qramsey
