#include "qramsey/antichains.hpp"

#include <json.hpp>

namespace qramsey {

namespace {

std::vector<Code4> all_code4() {
    std::vector<Code4> out;
    for (int v = 0; v < 256; ++v) {
        Code4 c;
        for (int i = 0; i < 4; ++i) c.e[i] = static_cast<std::uint8_t>((v >> (2 * (3 - i))) & 3);
        out.push_back(c);
    }
    return out;
}

template <class Pred>
std::vector<Code4> filter4(Pred pred) {
    std::vector<Code4> out;
    for (const auto& c : all_code4()) {
        if (pred(c)) out.push_back(c);
    }
    return out;
}

template <class Pred>
std::vector<Code6> filter6(Pred pred) {
    std::vector<Code6> out;
    for (int v = 0; v < 64; ++v) {
        if (pred(Code6::of(static_cast<std::uint8_t>(v)))) out.push_back(Code6::of(static_cast<std::uint8_t>(v)));
    }
    return out;
}

template <class Pred>
std::vector<Code6x4> filter6x4(Pred pred) {
    std::vector<Code6x4> out;
    Code6x4 c;
    for (int a = 0; a < 64; ++a) {
        c.e[0] = Code6::of(static_cast<std::uint8_t>(a));
        for (int b = 0; b < 64; ++b) {
            c.e[1] = Code6::of(static_cast<std::uint8_t>(b));
            for (int d = 0; d < 64; ++d) {
                c.e[2] = Code6::of(static_cast<std::uint8_t>(d));
                for (int e = 0; e < 64; ++e) {
                    c.e[3] = Code6::of(static_cast<std::uint8_t>(e));
                    if (pred(c)) out.push_back(c);
                }
            }
        }
    }
    return out;
}

RelationSpec parse_spec(const std::string& text) { return RelationSpec::parse(text); }

}  // namespace

Family parse_family(std::string_view text) {
    static const std::pair<std::string_view, Family> names[] = {
        {"P", Family::P}, {"A", Family::A}, {"Cpi02", Family::Cpi02}, {"N", Family::N}, {"V", Family::V},
        {"H", Family::H}, {"S", Family::S}, {"C", Family::C},         {"Ac", Family::Ac}};
    for (const auto& [name, f] : names) {
        if (name == text) return f;
    }
    throw DomainError("unknown family '" + std::string(text) + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::P:
            return "P";
        case Family::A:
            return "A";
        case Family::Cpi02:
            return "Cpi02";
        case Family::N:
            return "N";
        case Family::V:
            return "V";
        case Family::H:
            return "H";
        case Family::S:
            return "S";
        case Family::C:
            return "C";
        case Family::Ac:
            return "Ac";
    }
    return "";
}

std::vector<Code4> enum_P() { return filter4(in_P); }
std::vector<Code4> enum_A() { return filter4(in_A); }
std::vector<Code4> enum_Cpi02_second() { return filter4(in_Cpi02_second); }
std::vector<Code6> enum_N() { return filter6(in_N); }
std::vector<Code6> enum_C() { return filter6(in_C); }
std::vector<Code6x4> enum_V() { return filter6x4(in_V); }
std::vector<Code6x4> enum_H() { return filter6x4(in_H); }
std::vector<Code6x4> enum_S() { return filter6x4(in_S); }

RelationSpec instantiate(const Code4& t, Family f, const GammaClass& g) {
    RelationSpec r;
    r.gamma = g;
    r.code4 = t;
    switch (f) {
        case Family::P:
            if (!in_P(t)) throw DomainError("code " + t.str() + " is not in P");
            r.id = RelId::Rt_P;
            return r;
        case Family::A:
            if (!in_A(t)) throw DomainError("code " + t.str() + " is not in A");
            r.id = RelId::RtA_A;
            return r;
        case Family::Cpi02:
            if (!in_Cpi02_second(t)) throw DomainError("code " + t.str() + " is not in the Pi02 second family");
            r.id = RelId::RtA_A;
            r.gamma = GammaClass::pi02();
            return r;
        default:
            throw DomainError("family " + family_name(f) + " does not take 4-digit codes");
    }
}

RelationSpec instantiate(const Code6& t, Family f, bool complement) {
    if (f != Family::N) throw DomainError("family " + family_name(f) + " does not take 6-bit codes");
    if (!in_N(t)) throw DomainError("code " + t.str() + " is not in N");
    RelationSpec r;
    r.id = RelId::Rank1_N;
    r.code6 = t;
    r.complement = complement;
    return r;
}

RelationSpec instantiate(const Code6x4& t, Family f, bool complement) {
    RelationSpec r;
    r.code6x4 = t;
    r.complement = complement;
    switch (f) {
        case Family::V:
            if (!in_V(t)) throw DomainError("code " + t.str() + " is not in V");
            r.id = RelId::Rank1_V;
            return r;
        case Family::H:
            if (!in_H(t)) throw DomainError("code " + t.str() + " is not in H");
            r.id = RelId::Rank1_H;
            return r;
        case Family::S:
            if (!in_S(t)) throw DomainError("code " + t.str() + " is not in S");
            r.id = RelId::Rank1_S;
            return r;
        default:
            throw DomainError("family " + family_name(f) + " does not take 6x4 codes");
    }
}

std::vector<CodeEntry> enum_AGamma(const GammaClass& g) {
    std::vector<CodeEntry> out;
    for (const auto& t : enum_P()) out.push_back({"P", t.str(), instantiate(t, Family::P, g)});
    RelationSpec delta;
    delta.id = RelId::R_D;
    delta.gamma = g;
    delta.digraph = DigraphKind::Empty;
    out.push_back({"Delta", "-", delta});
    return out;
}

std::vector<CodeEntry> enum_Cpi02() {
    auto out = enum_AGamma(GammaClass::pi02());
    for (const auto& t : enum_Cpi02_second()) {
        out.push_back({"Cpi02_S", t.str(), instantiate(t, Family::Cpi02)});
    }
    return out;
}

std::vector<CodeEntry> listing(Family f) {
    std::vector<CodeEntry> out;
    switch (f) {
        case Family::P:
            for (const auto& t : enum_P()) out.push_back({"P", t.str(), instantiate(t, f)});
            break;
        case Family::A:
            for (const auto& t : enum_A()) out.push_back({"A", t.str(), instantiate(t, f)});
            break;
        case Family::Cpi02:
            return enum_Cpi02();
        case Family::N:
            for (const auto& t : enum_N()) out.push_back({"N", t.str(), instantiate(t, f, false)});
            break;
        case Family::C:
            // C names codes with closed sections; they are not relations on their own.
            for (const auto& t : enum_C()) {
                RelationSpec r;
                r.id = RelId::Rank1_N;
                r.code6 = t;
                out.push_back({"C", t.str(), r});
            }
            break;
        case Family::V:
            for (const auto& t : enum_V()) out.push_back({"V", t.str(), instantiate(t, f, false)});
            break;
        case Family::H:
            for (const auto& t : enum_H()) out.push_back({"H", t.str(), instantiate(t, f, false)});
            break;
        case Family::S:
            for (const auto& t : enum_S()) out.push_back({"S", t.str(), instantiate(t, f, false)});
            break;
        case Family::Ac:
            for (const auto& e : catalog_Ac()) out.push_back({"Ac", std::to_string(e.index), e.spec});
            break;
    }
    return out;
}

std::string topology_name(Topology t) {
    switch (t) {
        case Topology::Clopen:
            return "clopen";
        case Topology::OpenNotClosed:
            return "open-not-closed";
        case Topology::ClosedNotOpen:
            return "closed-not-open";
    }
    return "";
}

std::vector<CatalogEntry> catalog_Ac() {
    static const char* const names[13] = {"full", "H", "V", "L", "H+", "V+", "L+", "neq", "lex-less",
                                          "eq",   "lex-leq", "Graph(o)", "Graph(o|N_0)"};
    auto in = [](int i, std::initializer_list<int> set) {
        for (int k : set) {
            if (k == i) return true;
        }
        return false;
    };
    std::vector<CatalogEntry> out;
    for (int i = 0; i < 13; ++i) {
        CatalogEntry e;
        e.index = i;
        e.name = names[i];
        e.spec = parse_spec("Ac:i=" + std::to_string(i));
        e.flags.reflexive = in(i, {0, 9, 10});
        e.flags.irreflexive = in(i, {1, 2, 3, 7, 8, 11, 12});
        e.flags.symmetric = in(i, {0, 3, 6, 7, 9, 11});
        e.flags.antisymmetric = in(i, {1, 2, 4, 5, 8, 9, 10, 12});
        e.flags.transitive = in(i, {0, 1, 2, 4, 5, 8, 9, 10, 12});
        e.topology = i <= 6 ? Topology::Clopen : (i <= 8 ? Topology::OpenNotClosed : Topology::ClosedNotOpen);
        e.graph = in(i, {3, 7, 11});
        out.push_back(e);
    }
    return out;
}

GraphSubbases graph_subbases() {
    GraphSubbases g;
    auto n_entry = [](const char* code, bool complement, bool acyclic) {
        Code6 t = Code6::parse(code);
        return SubbaseEntry{"N", t.str(), complement, acyclic, in_N(t), instantiate(t, Family::N, complement)};
    };
    auto x_entry = [](Family f, const std::string& code, bool complement, bool acyclic) {
        Code6x4 t = Code6x4::parse(code);
        bool member = f == Family::V ? in_V(t) : in_S(t);
        return SubbaseEntry{family_name(f), t.str(), complement, acyclic, member, instantiate(t, f, complement)};
    };

    g.pi01_le.push_back(n_entry("000110", false, true));
    g.pi01_le.push_back(n_entry("101000", false, false));
    g.pi01_le.push_back(n_entry("101110", false, false));
    g.pi01_le.push_back(x_entry(Family::V, "000000,000010,000100,000000", false, true));
    g.pi01_le.push_back(x_entry(Family::S, "000000,010000,010000,000000", false, true));

    g.pi01_sq = g.pi01_le;
    RelationSpec r01;
    r01.id = RelId::R01_1;
    g.pi01_sq.push_back(SubbaseEntry{"R01_1", "-", false, true, true, r01});

    g.sigma01.push_back(n_entry("111001", true, true));
    auto tail = [](int e0, int e1) {
        return std::to_string(e0) + "1" + std::to_string(e0) + std::to_string(e1) + std::to_string(e1) + "1";
    };
    const std::pair<int, int> choices[3] = {{0, 0}, {0, 1}, {1, 1}};
    for (const auto& [e0, e1] : choices) {
        g.sigma01.push_back(
            x_entry(Family::V, "000001,000010,000100," + tail(e0, e1), true, e0 == 1 && e1 == 1));
    }
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            std::string lo = tail(choices[a].first, choices[a].second);
            std::string hi = tail(choices[b].first, choices[b].second);
            if (!(lo <= hi)) continue;
            g.sigma01.push_back(x_entry(Family::S, lo + ",010000,010000," + hi, true, false));
        }
    }
    return g;
}

std::vector<std::pair<std::string, std::size_t>> cardinality_table() {
    const std::size_t p = enum_P().size();
    const std::size_t a = enum_A().size();
    const std::size_t agamma = enum_AGamma(GammaClass::sigma02()).size();
    const std::size_t n = enum_N().size();
    const std::size_t v = enum_V().size();
    const std::size_t h = enum_H().size();
    const std::size_t s = enum_S().size();
    const auto sub = graph_subbases();
    return {{"P", p},
            {"AGamma", agamma},
            {"A", a},
            {"AGamma+BGamma", agamma + a},
            {"Cpi02", enum_Cpi02().size()},
            {"Ac", catalog_Ac().size()},
            {"N", n},
            {"V", v},
            {"H", h},
            {"C", enum_C().size()},
            {"S", s},
            {"Pi01 total", n + v + h + s},
            {"graph Pi01 le", sub.pi01_le.size()},
            {"graph Pi01 sq", sub.pi01_sq.size()},
            {"graph Sigma01", sub.sigma01.size()}};
}

std::string to_csv(const std::vector<CodeEntry>& entries) {
    std::string out = "family,code,relation\n";
    for (const auto& e : entries) out += e.family + ",\"" + e.code + "\",\"" + e.spec.str() + "\"\n";
    return out;
}

std::string to_json(Family f, const std::vector<CodeEntry>& entries) {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& e : entries) {
        codes.push_back({{"family", e.family}, {"code", e.code}, {"relation", e.spec.str()}});
    }
    nlohmann::json doc{{"family", family_name(f)}, {"count", entries.size()}, {"codes", codes}};
    return doc.dump(2);
}

}  // namespace qramsey
