#include "qramsey/embed.hpp"

#include <algorithm>

#include <json.hpp>

#include "qramsey/coloring.hpp"

namespace qramsey {

HSpec hspec_preset(std::string_view name) {
    if (name == "pf") return {"pf", [](const QWord&) { return true; }};
    if (name == "double") {
        return {"double", [](const QWord& w) {
                    const Word& b = w.word();
                    if (b.size() % 2 != 0) return false;
                    for (std::size_t i = 0; i < b.size(); i += 2) {
                        if (b[i] != b[i + 1]) return false;
                    }
                    return true;
                }};
    }
    if (name.substr(0, 4) == "cyl:") {
        Word u = Word::parse(name.substr(4));
        return {"cyl:" + u.str(), [u](const QWord& w) { return Point::from_q(w).in_cylinder(u); }};
    }
    throw DomainError("unknown H preset '" + std::string(name) + "' (expected pf, cyl:<word> or double)");
}

QWord h_search(const HSpec& h, const Word& prefix, const std::set<QWord>& exclude, std::size_t bound,
               std::size_t skip) {
    std::size_t examined = 0;
    auto admissible = [&](const QWord& w) {
        if (++examined > bound) {
            throw SearchExhausted(prefix.str(), "H not dense near prefix " + prefix.str() + " (searched " +
                                                    std::to_string(bound) + " candidates)");
        }
        if (exclude.count(w) || !h.member(w)) return false;
        if (skip > 0) {
            --skip;
            return false;
        }
        return true;
    };
    // The only candidate of length <= |prefix| is q(prefix); every longer one
    // is prefix.u.1, and these are length-lex ordered by u.
    QWord shortest = q_normalize(prefix);
    if (admissible(shortest)) return shortest;
    for (std::size_t len = 0;; ++len) {
        const std::size_t count = len >= 63 ? static_cast<std::size_t>(-1) : std::size_t{1} << len;
        for (std::size_t u = 0; u < count; ++u) {
            Word w = prefix;
            for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<int>((u >> (len - 1 - i)) & 1));
            w.push_back(1);
            QWord q(w);
            if (admissible(q)) return q;
        }
    }
}

SuffAssignment EmbeddingScheme::suff() const {
    SuffAssignment a;
    a.depth = depth;
    for (const auto& [t, node] : nodes) {
        if (is_q(t)) a.table.emplace(QWord(t), node.s);
    }
    return a;
}

std::string EmbeddingScheme::to_json() const {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [t, node] : nodes) {
        entries.push_back({{"t", t.str()}, {"n_t", node.n.str()}, {"z_t", node.z.str()}, {"s_t", node.s.str()}});
    }
    nlohmann::ordered_json doc;
    doc["depth"] = depth;
    doc["entries"] = entries;
    return doc.dump(2);
}

EmbeddingScheme build_embedding(const HSpec& h, std::size_t depth, const EmbedOptions& options) {
    if (depth < 1) throw DomainError("build_embedding: depth must be at least 1");
    auto skip_at = [&](const Word& t) { return options.skip ? options.skip(t) : std::size_t{0}; };

    EmbeddingScheme e;
    e.depth = depth;
    const QWord root = h_search(h, Word(), {QWord()}, options.bound, skip_at(Word()));
    e.nodes[Word()] = {alpha_index(root), root.word(), root};
    std::size_t longest_q = root.size();  // max |s_q| over Q-words defined so far

    for (std::size_t level = 0; level < depth; ++level) {
        // Words of this level in lexicographic order.
        for (std::size_t v = 0; v < (std::size_t{1} << level); ++v) {
            Word t;
            for (std::size_t i = 0; i < level; ++i) t.push_back(static_cast<int>((v >> (level - 1 - i)) & 1));
            const SchemeNode parent = e.nodes.at(t);
            const Point base = Point::from_q(parent.s);

            std::size_t length = std::max({parent.s.size(), parent.z.size(), level + 1, longest_q + 1});
            // Keep alpha_n (n <= |t|) out of the new cylinder, except alpha_{n_t}
            // itself, which the search excludes.
            for (;;) {
                Word prefix = base.unfold(length);
                bool clear = true;
                for (std::size_t n = 0; n <= level && clear; ++n) {
                    Point a = alpha(n);
                    clear = a == base || !a.in_cylinder(prefix);
                }
                if (clear) break;
                ++length;
            }
            const Word prefix = base.unfold(length);

            Word t1 = t;
            t1.push_back(1);
            Word t0 = t;
            t0.push_back(0);
            const QWord s1 = h_search(h, prefix, {QWord(), parent.s}, options.bound, skip_at(t1));
            e.nodes[t1] = {alpha_index(s1), s1.word(), s1};
            e.nodes[t0] = {parent.n, base.unfold(s1.size()), parent.s};
            longest_q = std::max(longest_q, s1.size());
        }
    }
    return e;
}

namespace {

std::vector<Word> words_of_length(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
        Word t;
        for (std::size_t i = 0; i < n; ++i) t.push_back(static_cast<int>((v >> (n - 1 - i)) & 1));
        out.push_back(t);
    }
    return out;
}

Word child(const Word& t, int bit) {
    Word c = t;
    c.push_back(bit);
    return c;
}

}  // namespace

std::vector<ConditionResult> verify_conditions(const EmbeddingScheme& e, const HSpec& h) {
    std::vector<ConditionResult> out;
    for (int id = 1; id <= 9; ++id) out.push_back({id, true, ""});
    auto fail = [&](int id, const std::string& detail) {
        if (!out[id - 1].pass) return;
        out[id - 1].pass = false;
        out[id - 1].detail = detail;
    };
    auto node = [&](const Word& t) -> const SchemeNode* {
        auto it = e.nodes.find(t);
        return it == e.nodes.end() ? nullptr : &it->second;
    };

    for (std::size_t level = 0; level <= e.depth; ++level) {
        for (const auto& t : words_of_length(level)) {
            const SchemeNode* nt = node(t);
            if (!nt) {
                fail(1, "missing node " + t.str());
                continue;
            }
            const Point at = Point::from_q(nt->s);
            if (nt->n < 1 || alpha_index(nt->s) != nt->n) fail(2, "s_" + t.str() + " does not name alpha_{n_t}");
            if (!at.in_cylinder(nt->z)) fail(2, "alpha_{n_t} outside U_t at t = " + t.str());
            if (!h.member(nt->s)) fail(2, "s_" + t.str() + " = " + nt->s.str() + " is not in H");
            if (nt->z.size() < t.size()) fail(3, "|z_t| < |t| at t = " + t.str());
            if (level == e.depth) continue;

            const SchemeNode* n0 = node(child(t, 0));
            const SchemeNode* n1 = node(child(t, 1));
            if (!n0 || !n1) {
                fail(1, "missing children of " + t.str());
                continue;
            }
            if (!nt->z.is_prefix_of(n0->z) || !nt->z.is_prefix_of(n1->z)) {
                fail(1, "U_{t e} not inside U_t at t = " + t.str());
            }
            if (n0->z.size() != n1->z.size() || !(n0->z < n1->z)) {
                fail(4, "z_{t0} !<lex z_{t1} at t = " + t.str());
            }
            if (n0->n != nt->n) fail(5, "n_{t0} != n_t at t = " + t.str());
            for (std::size_t n = 0; n <= level; ++n) {
                if (alpha(n).in_cylinder(n1->z)) {
                    fail(6, "alpha_" + std::to_string(n) + " in U_{t1} at t = " + t.str());
                }
            }
            if (!(nt->s.word().is_prefix_of(n1->s.word()) && nt->s.size() < n1->s.size())) {
                fail(8, "s_t not a proper prefix of s_{t1} at t = " + t.str());
            }
        }
    }

    const SuffAssignment a = e.suff();
    const auto domain = q_words_upto(e.depth);
    for (std::size_t k = 1; k < domain.size(); ++k) {
        auto lo = a.table.find(domain[k - 1]);
        auto hi = a.table.find(domain[k]);
        if (lo == a.table.end() || hi == a.table.end()) continue;
        if (lo->second.size() >= hi->second.size()) {
            fail(7, "|s_" + domain[k - 1].str() + "| >= |s_" + domain[k].str() + "|");
        }
    }
    for (const auto& z : domain) {
        for (const auto& t : domain) {
            auto sz = a.table.find(z);
            auto st = a.table.find(t);
            if (sz == a.table.end() || st == a.table.end()) continue;
            if (invariant_i(z, t) != invariant_i(sz->second, st->second)) {
                fail(9, "i(" + z.str() + "," + t.str() + ") changes under s");
            }
        }
    }
    try {
        SuffVerdict v = suff_check(a);
        if (!v.pass) {
            fail(9, "suff_check counterexample (" + v.counterexample->first.str() + "," +
                        v.counterexample->second.str() + ")");
        }
    } catch (const PreconditionError& err) {
        fail(9, std::string("suff_check precondition (") + err.clause() + "): " + err.what());
    }
    return out;
}

PreservationVerdict check_color_preservation(const EmbeddingScheme& e) {
    const SuffAssignment a = e.suff();
    const auto domain = q_words_upto(e.depth);
    std::vector<QWord> image;
    for (const auto& q : domain) {
        auto it = a.table.find(q);
        if (it == a.table.end()) throw PreconditionError("domain", "scheme has no s_" + q.str());
        image.push_back(it->second);
    }
    for (std::size_t k = 1; k < domain.size(); ++k) {
        if (image[k - 1].size() >= image[k].size()) {
            throw PreconditionError("7", "|s_" + domain[k - 1].str() + "| >= |s_" + domain[k].str() + "|");
        }
    }
    for (std::size_t k = 0; k < domain.size(); ++k) {
        if (domain[k].size() >= e.depth) continue;
        Word t1 = child(domain[k].word(), 1);
        const QWord& s1 = a.table.at(QWord(t1));
        if (!(image[k].word().is_prefix_of(s1.word()) && image[k].size() < s1.size())) {
            throw PreconditionError("8", "s_" + domain[k].str() + " is not a proper prefix of s_" + t1.str());
        }
    }

    PreservationVerdict v;
    for (std::size_t x = 0; x < domain.size(); ++x) {
        for (std::size_t y = x + 1; y < domain.size(); ++y) {
            ++v.pairs_checked;
            std::size_t before = color_c(Point::from_q(domain[x]), Point::from_q(domain[y]));
            std::size_t after = color_c(Point::from_q(image[x]), Point::from_q(image[y]));
            v.colors.insert(after);
            if (before != after && v.pass) {
                v.pass = false;
                v.counterexample = std::make_pair(domain[x], domain[y]);
            }
        }
    }
    return v;
}

}  // namespace qramsey
