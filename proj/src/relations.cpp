#include "qramsey/relations.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "qramsey/oscillation.hpp"

namespace qramsey {

namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
    std::uint32_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw DomainError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

bool is_tagged(Space s) {
    return s == Space::D2xCantor || s == Space::D2xK || s == Space::Lspace || s == Space::Mspace;
}

bool is_k_type(Space s) {
    return s == Space::Kspace || s == Space::D2xK || s == Space::Lspace || s == Space::Mspace;
}

void validate(const SpacePoint& p) {
    if (is_tagged(p.space) != (p.tag == 0 || p.tag == 1)) {
        throw DomainError("point " + p.str() + " has a tag inconsistent with space " + space_name(p.space));
    }
    if (p.space == Space::Sseq && !(p.point == Point() || p.point.bit(0) == 1)) {
        throw DomainError("point " + p.point.str() + " is not in S");
    }
    if (p.space == Space::Lspace && p.tag == 0 && !p.kpoint.zero) {
        throw DomainError("point " + p.str() + " is not in L");
    }
    if (p.space == Space::Mspace && p.tag == 1 && !p.kpoint.zero) {
        throw DomainError("point " + p.str() + " is not in M");
    }
}

const Point& zero_point() {
    static const Point z;
    return z;
}

bool in_n1(const Point& x) { return x.bit(0) == 1; }

bool catalog_contains(int i, const Point& x, const Point& y) {
    const bool h = in_n1(x) && y == zero_point();
    const bool v = x == zero_point() && in_n1(y);
    const bool origin = x == zero_point() && y == zero_point();
    switch (i) {
        case 0:
            return true;
        case 1:
            return h;
        case 2:
            return v;
        case 3:
            return h || v;
        case 4:
            return h || origin;
        case 5:
            return v || origin;
        case 6:
            return h || v || origin;
        case 7:
            return !(x == y);
        case 8:
            return lex_compare(x, y) < 0;
        case 9:
            return x == y;
        case 10:
            return lex_compare(x, y) <= 0;
        case 11:
            return y == x.flip_first();
        case 12:
            return x.bit(0) == 0 && y == x.flip_first();
    }
    throw DomainError("catalog index " + std::to_string(i) + " out of range");
}

bool in_tj(int j0, int j1, const KPoint& x, const KPoint& y) {
    if (x.zero || y.zero) return false;
    if (x.k < static_cast<std::uint32_t>(j0) || y.k < static_cast<std::uint32_t>(j1)) return false;
    std::uint32_t a = x.k - j0, b = y.k - j1;
    return a == b && a % 2 == 0;
}

}  // namespace

KPoint KPoint::parse(std::string_view text) {
    if (text == "0") return origin();
    if (text.substr(0, 3) != "2^-") throw DomainError("invalid K point '" + std::string(text) + "'");
    return dyadic(parse_uint(text.substr(3), "K point exponent"));
}

std::string KPoint::str() const { return zero ? "0" : "2^-" + std::to_string(k); }

std::string space_name(Space s) {
    switch (s) {
        case Space::Cantor:
            return "Cantor";
        case Space::D2xCantor:
            return "D2xCantor";
        case Space::Sseq:
            return "Sseq";
        case Space::Kspace:
            return "Kspace";
        case Space::D2xK:
            return "D2xK";
        case Space::Lspace:
            return "Lspace";
        case Space::Mspace:
            return "Mspace";
    }
    return "";
}

SpacePoint SpacePoint::cantor(Point p) {
    SpacePoint s;
    s.point = std::move(p);
    return s;
}

SpacePoint SpacePoint::d2(int tag, Point p) {
    SpacePoint s{Space::D2xCantor, tag, std::move(p), {}};
    validate(s);
    return s;
}

SpacePoint SpacePoint::sseq(Point p) {
    SpacePoint s{Space::Sseq, -1, std::move(p), {}};
    validate(s);
    return s;
}

SpacePoint SpacePoint::kspace(KPoint k) { return {Space::Kspace, -1, Point(), k}; }

SpacePoint SpacePoint::d2k(int tag, KPoint k) {
    SpacePoint s{Space::D2xK, tag, Point(), k};
    validate(s);
    return s;
}

SpacePoint SpacePoint::lspace(int tag, KPoint k) {
    SpacePoint s{Space::Lspace, tag, Point(), k};
    validate(s);
    return s;
}

SpacePoint SpacePoint::mspace(int tag, KPoint k) {
    SpacePoint s{Space::Mspace, tag, Point(), k};
    validate(s);
    return s;
}

SpacePoint SpacePoint::parse(Space space, std::string_view text) {
    SpacePoint s;
    s.space = space;
    if (is_tagged(space)) {
        if (text.size() < 3 || (text[0] != '0' && text[0] != '1') || text[1] != ':') {
            throw DomainError("expected '<bit>:<point>' in space " + space_name(space) + ", got '" +
                              std::string(text) + "'");
        }
        s.tag = text[0] - '0';
        text.remove_prefix(2);
    }
    if (is_k_type(space)) {
        s.kpoint = KPoint::parse(text);
    } else {
        s.point = Point::parse(text);
    }
    validate(s);
    return s;
}

std::string SpacePoint::str() const {
    std::string body = is_k_type(space) ? kpoint.str() : point.str();
    return tag >= 0 ? std::to_string(tag) + ":" + body : body;
}

int diag_class(const GammaClass& g, const Point& x) { return g.contains(x) ? 0 : 2; }

bool in_diag_set(const GammaClass& g, int j, const Point& x) {
    switch (j) {
        case 0:
            return g.contains(x);
        case 1:
            return false;
        case 2:
            return !g.contains(x);
        case 3:
            return true;
    }
    throw DomainError("diagonal class index " + std::to_string(j) + " out of range");
}

int kcell(const KPoint& x, const KPoint& y) noexcept {
    if (x.in_c() && y.in_c()) {
        // 2^-a < 2^-b iff a > b.
        if (x.k == y.k) return 1;
        return x.k > y.k ? 0 : 2;
    }
    if (x.in_c()) return 3;
    if (y.in_c()) return 4;
    return 5;
}

namespace {

const std::map<std::string, RelId, std::less<>>& id_names() {
    static const std::map<std::string, RelId, std::less<>> names{
        {"E3", RelId::E3},           {"Gm", RelId::Gm},           {"GmA", RelId::GmA},
        {"Om", RelId::Om},           {"Rt_P", RelId::Rt_P},       {"RtA_A", RelId::RtA_A},
        {"Rbeta", RelId::Rbeta},     {"GbetaBip", RelId::GbetaBip}, {"GbetaDiag", RelId::GbetaDiag},
        {"R_D", RelId::R_D},         {"Rank1_N", RelId::Rank1_N}, {"Rank1_V", RelId::Rank1_V},
        {"Rank1_H", RelId::Rank1_H}, {"Rank1_S", RelId::Rank1_S}, {"Tj", RelId::Tj},
        {"R01_0", RelId::R01_0},     {"R01_1", RelId::R01_1},     {"Ac", RelId::Ac}};
    return names;
}

std::string id_name(RelId id) {
    for (const auto& [name, value] : id_names()) {
        if (value == id) return name;
    }
    return "";
}

bool uses_gamma(RelId id) {
    switch (id) {
        case RelId::E3:
        case RelId::Gm:
        case RelId::GmA:
        case RelId::Om:
        case RelId::Rt_P:
        case RelId::RtA_A:
        case RelId::Rbeta:
        case RelId::R_D:
            return true;
        default:
            return false;
    }
}

bool uses_complement(RelId id) {
    switch (id) {
        case RelId::Rank1_N:
        case RelId::Rank1_V:
        case RelId::Rank1_H:
        case RelId::Rank1_S:
        case RelId::Tj:
        case RelId::R01_0:
        case RelId::R01_1:
            return true;
        default:
            return false;
    }
}

}  // namespace

RelationSpec RelationSpec::parse(std::string_view text) {
    RelationSpec r;
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::string_view params = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);

    if (name.size() > 3 && name.substr(0, 3) == "Ac_") {
        r.id = RelId::Ac;
        r.ac = static_cast<int>(parse_uint(name.substr(3), "catalog index"));
    } else {
        auto it = id_names().find(name);
        if (it == id_names().end()) throw DomainError("unknown relation id '" + std::string(name) + "'");
        r.id = it->second;
    }

    // Split on commas; a piece without '=' continues the previous value, which
    // lets 6x4 code literals keep their inner commas.
    std::vector<std::pair<std::string, std::string>> kv;
    std::size_t pos = 0;
    while (!params.empty() && pos <= params.size()) {
        auto comma = params.find(',', pos);
        std::string_view piece = params.substr(pos, comma == std::string_view::npos ? params.npos : comma - pos);
        auto eq = piece.find('=');
        if (eq == std::string_view::npos) {
            if (kv.empty()) throw DomainError("malformed relation parameters '" + std::string(params) + "'");
            kv.back().second += "," + std::string(piece);
        } else {
            kv.emplace_back(std::string(piece.substr(0, eq)), std::string(piece.substr(eq + 1)));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }

    bool have_t = false;
    for (const auto& [key, value] : kv) {
        if (key == "gamma" && uses_gamma(r.id)) {
            r.gamma = GammaClass::parse(value);
        } else if (key == "t" && (r.id == RelId::Rt_P || r.id == RelId::RtA_A)) {
            r.code4 = Code4::parse(value);
            have_t = true;
        } else if (key == "t" && r.id == RelId::Rank1_N) {
            r.code6 = Code6::parse(value);
            have_t = true;
        } else if (key == "t" && (r.id == RelId::Rank1_V || r.id == RelId::Rank1_H || r.id == RelId::Rank1_S)) {
            r.code6x4 = Code6x4::parse(value);
            have_t = true;
        } else if (key == "beta" && (r.id == RelId::Rbeta || r.id == RelId::GbetaBip ||
                                     r.id == RelId::GbetaDiag || r.id == RelId::R_D)) {
            r.beta.beta = Point::parse(value);
        } else if (key == "d" && r.id == RelId::R_D) {
            if (value == "empty") {
                r.digraph = DigraphKind::Empty;
            } else if (value == "full") {
                r.digraph = DigraphKind::Full;
            } else if (value == "beta") {
                r.digraph = DigraphKind::Beta;
            } else {
                throw DomainError("unknown digraph '" + value + "' (expected empty, full or beta)");
            }
        } else if (key == "j" && r.id == RelId::Tj) {
            if (value.size() != 2 || (value[0] != '0' && value[0] != '1') || (value[1] != '0' && value[1] != '1')) {
                throw DomainError("invalid j '" + value + "' (expected two bits)");
            }
            r.j0 = value[0] - '0';
            r.j1 = value[1] - '0';
        } else if (key == "complement" && uses_complement(r.id)) {
            if (value != "0" && value != "1") throw DomainError("complement must be 0 or 1");
            r.complement = value == "1";
        } else if (key == "i" && r.id == RelId::Ac) {
            r.ac = static_cast<int>(parse_uint(value, "catalog index"));
        } else {
            throw DomainError("parameter '" + key + "' not accepted by " + std::string(name));
        }
    }
    bool needs_t = r.id == RelId::Rt_P || r.id == RelId::RtA_A || r.id == RelId::Rank1_N ||
                   r.id == RelId::Rank1_V || r.id == RelId::Rank1_H || r.id == RelId::Rank1_S;
    if (needs_t && !have_t) throw DomainError(std::string(name) + " requires a code parameter t");
    if (r.id == RelId::Ac && (r.ac < 0 || r.ac > 12)) {
        throw DomainError("catalog index " + std::to_string(r.ac) + " out of range");
    }
    return r;
}

std::string RelationSpec::str() const {
    if (id == RelId::Ac) return "Ac:i=" + std::to_string(ac);
    std::vector<std::string> params;
    if (uses_gamma(id)) params.push_back("gamma=" + gamma.name());
    switch (id) {
        case RelId::Rt_P:
        case RelId::RtA_A:
            params.push_back("t=" + code4.str());
            break;
        case RelId::Rank1_N:
            params.push_back("t=" + code6.str());
            break;
        case RelId::Rank1_V:
        case RelId::Rank1_H:
        case RelId::Rank1_S:
            params.push_back("t=" + code6x4.str());
            break;
        case RelId::Rbeta:
        case RelId::GbetaBip:
        case RelId::GbetaDiag:
            params.push_back("beta=" + beta.beta.str());
            break;
        case RelId::R_D:
            params.push_back(std::string("d=") +
                             (digraph == DigraphKind::Empty ? "empty" : digraph == DigraphKind::Full ? "full" : "beta"));
            if (digraph == DigraphKind::Beta) params.push_back("beta=" + beta.beta.str());
            break;
        case RelId::Tj:
            params.push_back("j=" + std::to_string(j0) + std::to_string(j1));
            break;
        default:
            break;
    }
    if (uses_complement(id) && complement) params.push_back("complement=1");
    std::string out = id_name(id);
    for (std::size_t k = 0; k < params.size(); ++k) out += (k == 0 ? ":" : ",") + params[k];
    return out;
}

Space RelationSpec::space() const noexcept {
    switch (id) {
        case RelId::E3:
        case RelId::Gm:
        case RelId::Om:
        case RelId::Rt_P:
        case RelId::GbetaBip:
            return Space::D2xCantor;
        case RelId::GmA:
        case RelId::RtA_A:
            return Space::Sseq;
        case RelId::Rbeta:
        case RelId::GbetaDiag:
        case RelId::R_D:
            return Space::Cantor;
        case RelId::Rank1_N:
        case RelId::Tj:
        case RelId::R01_0:
        case RelId::R01_1:
            return Space::Kspace;
        case RelId::Rank1_V:
            return Space::Lspace;
        case RelId::Rank1_H:
            return Space::Mspace;
        case RelId::Rank1_S:
            return Space::D2xK;
        case RelId::Ac:
            return ac >= 1 && ac <= 6 ? Space::Sseq : Space::Cantor;
    }
    return Space::Cantor;
}

bool eval(const RelationSpec& r, const SpacePoint& u, const SpacePoint& v) {
    const Space space = r.space();
    if (u.space != space || v.space != space) {
        throw DomainError("relation " + r.str() + " lives on " + space_name(space) + ", got points in " +
                          space_name(u.space) + " and " + space_name(v.space));
    }
    validate(u);
    validate(v);
    const Point& x = u.point;
    const Point& y = v.point;
    switch (r.id) {
        case RelId::E3:
            return (u.tag == v.tag && x == y) || (x == y && r.gamma.contains(x));
        case RelId::Gm:
            return u.tag != v.tag && x == y && r.gamma.contains(x);
        case RelId::Om:
            return u.tag == 0 && v.tag == 1 && x == y && r.gamma.contains(x);
        case RelId::Rt_P:
            return x == y && in_diag_set(r.gamma, r.code4.at(u.tag, v.tag), x);
        case RelId::GmA: {
            const Point& z = zero_point();
            if (x == z && in_n1(y)) return r.gamma.contains(y.shift());
            if (y == z && in_n1(x)) return r.gamma.contains(x.shift());
            return false;
        }
        case RelId::RtA_A: {
            const Point& z = zero_point();
            if (x == z && y == z) return r.code4.at(0, 0) == 1;
            if (x == z) return in_diag_set(r.gamma, r.code4.at(0, 1), y.shift());
            if (y == z) return in_diag_set(r.gamma, r.code4.at(1, 0), x.shift());
            return x == y && in_diag_set(r.gamma, r.code4.at(1, 1), x.shift());
        }
        case RelId::Rbeta:
            return r_beta_contains(r.gamma, r.beta, x, y);
        case RelId::GbetaBip:
            return g_beta_bipartite_contains(r.beta, {u.tag, x}, {v.tag, y});
        case RelId::GbetaDiag:
            return g_beta_diagfree_contains(r.beta, x, y);
        case RelId::R_D: {
            QDigraph d;
            switch (r.digraph) {
                case DigraphKind::Empty:
                    d = [](const QWord&, const QWord&) { return false; };
                    break;
                case DigraphKind::Full:
                    d = [](const QWord&, const QWord&) { return true; };
                    break;
                case DigraphKind::Beta:
                    d = [b = r.beta](const QWord& s, const QWord& t) { return b.enabled(invariant_i(s, t)); };
                    break;
            }
            return relation_of_digraph(r.gamma, d)(x, y);
        }
        case RelId::Rank1_N:
            return (r.code6.at(kcell(u.kpoint, v.kpoint)) == 1) != r.complement;
        case RelId::Rank1_V:
        case RelId::Rank1_H:
        case RelId::Rank1_S:
            return (r.code6x4.at(u.tag, v.tag).at(kcell(u.kpoint, v.kpoint)) == 1) != r.complement;
        case RelId::Tj:
            return in_tj(r.j0, r.j1, u.kpoint, v.kpoint) != r.complement;
        case RelId::R01_0:
            return in_tj(0, 1, u.kpoint, v.kpoint) != r.complement;
        case RelId::R01_1:
            return (in_tj(0, 1, u.kpoint, v.kpoint) || in_tj(1, 0, u.kpoint, v.kpoint)) != r.complement;
        case RelId::Ac:
            return catalog_contains(r.ac, x, y);
    }
    return false;
}

namespace {

std::vector<std::vector<char>> matrix(const RelationSpec& r, const std::vector<SpacePoint>& vertices) {
    const std::size_t n = vertices.size();
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) m[a][b] = eval(r, vertices[a], vertices[b]);
    }
    return m;
}

}  // namespace

Profile structural_profile(const RelationSpec& r, const std::vector<SpacePoint>& vertices) {
    const auto m = matrix(r, vertices);
    const std::size_t n = vertices.size();
    Profile p;
    for (std::size_t a = 0; a < n; ++a) {
        if (m[a][a]) p.irreflexive = false;
        else p.reflexive = false;
        for (std::size_t b = 0; b < n; ++b) {
            if (m[a][b] != m[b][a]) p.symmetric = false;
            if (a != b && m[a][b] && m[b][a]) p.antisymmetric = false;
            if (!m[a][b]) continue;
            for (std::size_t c = 0; c < n && p.transitive; ++c) {
                if (m[b][c] && !m[a][c]) p.transitive = false;
            }
        }
    }
    return p;
}

std::optional<std::vector<std::size_t>> find_cycle(std::size_t n,
                                                   const std::vector<std::vector<std::size_t>>& adjacency) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n, none);
    std::vector<char> seen(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        // Iterative depth-first search; every non-tree edge of an undirected
        // DFS joins a vertex to one of its ancestors.
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        seen[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == adjacency[v].size()) {
                stack.pop_back();
                continue;
            }
            std::size_t w = adjacency[v][next++];
            if (w == parent[v]) continue;
            if (seen[w]) {
                std::vector<std::size_t> cycle;
                for (std::size_t x = v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            seen[w] = 1;
            parent[w] = v;
            stack.emplace_back(w, 0);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<SpacePoint>> acyclicity_check(const RelationSpec& r,
                                                        const std::vector<SpacePoint>& vertices) {
    const auto m = matrix(r, vertices);
    const std::size_t n = vertices.size();
    std::vector<std::vector<std::size_t>> adjacency(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && (m[a][b] || m[b][a])) adjacency[a].push_back(b);
        }
    }
    auto cycle = find_cycle(n, adjacency);
    if (!cycle) return std::nullopt;
    std::vector<SpacePoint> out;
    for (auto k : *cycle) out.push_back(vertices[k]);
    return out;
}

std::vector<Point> standard_points() {
    std::vector<Point> out;
    for (int n = 0; n <= 20; ++n) out.push_back(alpha(n));
    out.push_back(Point::parse("(01)"));
    out.push_back(Point::parse("(10)"));
    out.push_back(Point::parse("(011)"));
    return out;
}

std::vector<SpacePoint> standard_vertices(Space space) {
    std::vector<SpacePoint> out;
    switch (space) {
        case Space::Cantor:
            for (auto& p : standard_points()) out.push_back(SpacePoint::cantor(p));
            break;
        case Space::D2xCantor:
            for (int tag = 0; tag < 2; ++tag) {
                for (auto& p : standard_points()) out.push_back(SpacePoint::d2(tag, p));
            }
            break;
        case Space::Sseq:
            out.push_back(SpacePoint::sseq(Point()));
            for (auto& p : standard_points()) out.push_back(SpacePoint::sseq(p.cons(1)));
            break;
        default:
            return k_vertices(space, 20);
    }
    return out;
}

std::vector<SpacePoint> k_vertices(Space space, std::uint32_t max_k) {
    std::vector<KPoint> ks{KPoint::origin()};
    for (std::uint32_t k = 0; k <= max_k; ++k) ks.push_back(KPoint::dyadic(k));
    std::vector<SpacePoint> out;
    switch (space) {
        case Space::Kspace:
            for (auto& k : ks) out.push_back(SpacePoint::kspace(k));
            break;
        case Space::D2xK:
            for (int tag = 0; tag < 2; ++tag) {
                for (auto& k : ks) out.push_back(SpacePoint::d2k(tag, k));
            }
            break;
        case Space::Lspace:
            out.push_back(SpacePoint::lspace(0, KPoint::origin()));
            for (auto& k : ks) out.push_back(SpacePoint::lspace(1, k));
            break;
        case Space::Mspace:
            for (auto& k : ks) out.push_back(SpacePoint::mspace(0, k));
            out.push_back(SpacePoint::mspace(1, KPoint::origin()));
            break;
        default:
            throw DomainError("k_vertices: " + space_name(space) + " is not a K-type space");
    }
    return out;
}

}  // namespace qramsey
