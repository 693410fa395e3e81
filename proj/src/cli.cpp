#include "qramsey/cli.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qramsey/antichains.hpp"
#include "qramsey/coloring.hpp"
#include "qramsey/embed.hpp"
#include "qramsey/oscillation.hpp"
#include "qramsey/relations.hpp"

namespace qramsey::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
    int code = kExitOk;
    Json result;
    Json details = Json::array();
    std::string text;  // plain-text rendering
};

struct Item {
    std::string name;
    bool pass = true;
    Json detail;
};

Outcome suite_outcome(const std::vector<Item>& items) {
    Outcome o;
    bool all = true;
    std::ostringstream text;
    for (const auto& it : items) {
        all = all && it.pass;
        Json d{{"item", it.name}, {"pass", it.pass}};
        if (!it.detail.is_null()) d["detail"] = it.detail;
        o.details.push_back(d);
        text << (it.pass ? "PASS " : "FAIL ") << it.name;
        if (!it.pass && !it.detail.is_null()) text << "  " << it.detail.dump();
        text << '\n';
    }
    o.result = all ? "pass" : "fail";
    text << (all ? "pass" : "fail") << '\n';
    o.text = text.str();
    o.code = all ? kExitOk : kExitFail;
    return o;
}

std::string scalar_line(const Json& j) { return (j.is_string() ? j.get<std::string>() : j.dump()) + "\n"; }

// ---- verify suites ----------------------------------------------------------

std::vector<Item> suite_cardinalities() {
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"P", 33},  {"AGamma", 34}, {"A", 42},     {"AGamma+BGamma", 76}, {"Cpi02", 52},
        {"Ac", 13}, {"N", 45},      {"V", 152},    {"H", 114},            {"C", 20},
        {"S", 7049}, {"Pi01 total", 7360}, {"graph Pi01 le", 5}, {"graph Pi01 sq", 6}, {"graph Sigma01", 10}};
    const auto actual = cardinality_table();
    std::vector<Item> items;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        bool ok = actual[k].first == expected[k].first && actual[k].second == expected[k].second;
        items.push_back({"|" + expected[k].first + "| = " + std::to_string(expected[k].second), ok,
                         ok ? Json() : Json{{"actual", actual[k].second}}});
    }
    return items;
}

std::vector<Item> suite_i_vectors(std::size_t max_len) {
    std::vector<Item> items;
    auto vec = [&](const char* z, const char* t, std::size_t want) {
        std::size_t got = invariant_i(QWord::parse(z), QWord::parse(t));
        items.push_back({std::string("i(") + z + "," + t + ") = " + std::to_string(want), got == want,
                         got == want ? Json() : Json{{"actual", got}}});
    };
    vec("e", "e", 0);
    vec("e", "1", 1);
    vec("1", "01", 2);
    vec("1101", "101", 2);
    vec("101", "111", 3);
    vec("01", "101", 3);
    vec("01", "111", 3);
    for (std::size_t p = 3; p <= 24; ++p) {
        auto tri = cycle_witness(p);
        bool ok = true;
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) ok = ok && color_c(tri[a], tri[b]) == p;
        }
        items.push_back({"triangle family p = " + std::to_string(p), ok, Json()});
    }
    try {
        InvariantTable table(max_len);
        std::size_t asym = 0;
        for (std::size_t a = 0; a < table.count(); ++a) {
            for (std::size_t b = a + 1; b < table.count(); ++b) asym += table.at(a, b) != table.at(b, a);
        }
        items.push_back({"one case applies at every step, |z|,|t| <= " + std::to_string(max_len), true, Json()});
        items.push_back({"symmetry, |z|,|t| <= " + std::to_string(max_len), asym == 0,
                         asym == 0 ? Json() : Json{{"asymmetric_pairs", asym}}});
    } catch (const DefectError& e) {
        items.push_back({"one case applies at every step, |z|,|t| <= " + std::to_string(max_len), false, e.what()});
    }
    return items;
}

std::vector<Item> suite_cycles(std::size_t max_p) {
    std::vector<Item> items;
    for (std::size_t p = 1; p <= max_p; ++p) {
        auto tri = cycle_witness(p);
        Json colors = Json::array();
        bool ok = !(tri[0] == tri[1]) && !(tri[1] == tri[2]) && !(tri[0] == tri[2]);
        for (int a = 0; a < 3 && ok; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                std::size_t c = color_c(tri[a], tri[b]);
                colors.push_back(c);
                ok = ok && c == p;
            }
        }
        RelationSpec r;
        r.id = RelId::GbetaDiag;
        r.beta.beta = Point(Word::repeat(0, p) + Word::parse("1"), Word::parse("0"));
        std::vector<SpacePoint> vs;
        for (auto& x : tri) vs.push_back(SpacePoint::cantor(x));
        auto cycle = acyclicity_check(r, vs);
        ok = ok && cycle && cycle->size() == 3;
        items.push_back({"cycle_witness(" + std::to_string(p) + ") is an s(R_beta)-cycle", ok,
                         ok ? Json() : Json{{"colors", colors}}});
    }
    return items;
}

std::size_t alpha_scan(std::size_t max_p, const InvariantTable& table, std::size_t* reached) {
    std::set<std::size_t> seen;
    for (std::size_t n = 1; n < table.count(); ++n) {
        for (std::size_t m = 0; m < n; ++m) {
            std::size_t c = table.at(m, n);
            if (c >= 1 && c <= max_p) seen.insert(c);
        }
        if (seen.size() == max_p) {
            *reached = n;
            return max_p;
        }
    }
    *reached = table.count() - 1;
    return seen.size();
}

std::vector<Item> suite_surjectivity(std::size_t max_p, std::size_t max_s, std::size_t alpha_p) {
    std::vector<Item> items;
    std::set<std::size_t> attained;
    Json bad;
    for (std::size_t p = 1; p <= max_p; ++p) {
        for (const auto& s : q_words_upto(max_s)) {
            auto [x, y] = witness_pair(p, s);
            std::size_t c = color_c(x, y);
            attained.insert(c);
            if ((c != p || !x.in_cylinder(s.word()) || !y.in_cylinder(s.word())) && bad.is_null()) {
                bad = Json{{"p", p}, {"s", s.str()}, {"x", x.str()}, {"y", y.str()}, {"color", c}};
            }
        }
    }
    items.push_back({"witness_pair(p, s) has color p in N_s, p <= " + std::to_string(max_p) + ", |s| <= " +
                         std::to_string(max_s),
                     bad.is_null(), bad});
    bool full = attained.size() == max_p && *attained.begin() == 1 && *attained.rbegin() == max_p;
    items.push_back({"attained range {1.." + std::to_string(max_p) + "}", full,
                     Json{{"attained", std::vector<std::size_t>(attained.begin(), attained.end())}}});

    InvariantTable table(12);
    std::size_t reached = 0;
    std::size_t got = alpha_scan(alpha_p, table, &reached);
    items.push_back({"pairs of alpha_n, n <= N, attain {1.." + std::to_string(alpha_p) + "}", got == alpha_p,
                     Json{{"N", reached}, {"attained_count", got}}});
    return items;
}

SuffAssignment random_scheme_table(std::mt19937_64& rng) {
    static const char* const presets[] = {"pf", "double", "cyl:1", "cyl:01", "cyl:10", "cyl:110"};
    HSpec h = hspec_preset(presets[rng() % 6]);
    std::size_t depth = 1 + rng() % 4;
    EmbedOptions opt;
    opt.skip = [&rng](const Word&) { return static_cast<std::size_t>(rng() % 3); };
    return build_embedding(h, depth, opt).suff();
}

std::vector<Item> suite_suff(std::size_t trials, std::uint64_t seed) {
    std::vector<Item> items;
    SuffAssignment example;
    example.depth = 2;
    example.table = {{QWord(), QWord()},
                     {QWord::parse("1"), QWord::parse("1")},
                     {QWord::parse("01"), QWord::parse("011")},
                     {QWord::parse("11"), QWord::parse("1011")}};
    items.push_back({"fixed depth-2 table", suff_check(example).pass, Json()});

    SuffAssignment identity;
    identity.depth = 2;
    for (const auto& q : q_words_upto(2)) identity.table[q] = q;
    std::string clause;
    try {
        suff_check(identity);
    } catch (const PreconditionError& e) {
        clause = e.clause();
    }
    items.push_back({"identity table rejected on clause (a)", clause == "a", Json{{"clause", clause}}});

    std::mt19937_64 rng(seed);
    Json bad;
    for (std::size_t k = 0; k < trials && bad.is_null(); ++k) {
        SuffAssignment a = random_scheme_table(rng);
        SuffVerdict v = suff_check(a);
        if (!v.pass) {
            bad = Json{{"trial", k},
                       {"z", v.counterexample->first.str()},
                       {"t", v.counterexample->second.str()},
                       {"expected", v.expected},
                       {"actual", v.actual}};
        }
    }
    items.push_back({std::to_string(trials) + " tables from randomized embedding runs", bad.is_null(), bad});
    return items;
}

std::vector<Item> suite_embed(const std::string& preset, std::size_t depth) {
    std::vector<Item> items;
    HSpec h = hspec_preset(preset);
    EmbeddingScheme e = build_embedding(h, depth);
    for (const auto& c : verify_conditions(e, h)) {
        items.push_back({"condition (" + std::to_string(c.id) + ")", c.pass, c.pass ? Json() : Json(c.detail)});
    }
    PreservationVerdict v = check_color_preservation(e);
    Json detail{{"pairs", v.pairs_checked},
                {"colors", std::vector<std::size_t>(v.colors.begin(), v.colors.end())}};
    if (v.counterexample) detail["counterexample"] = {v.counterexample->first.str(), v.counterexample->second.str()};
    items.push_back({"color preservation", v.pass, detail});
    items.push_back({"deterministic rebuild", build_embedding(h, depth).to_json() == e.to_json(), Json()});
    return items;
}

std::vector<SpacePoint> parse_vertices(const RelationSpec& r, const std::string& text) {
    if (text == "standard") return standard_vertices(r.space());
    if (text.rfind("k:", 0) == 0) return k_vertices(r.space(), static_cast<std::uint32_t>(std::stoul(text.substr(2))));
    const bool mixed = text.rfind("mixed:", 0) == 0;
    if (text.rfind("alpha:", 0) == 0 || mixed) {
        std::size_t n = std::stoul(text.substr(6));
        std::vector<Point> points;
        for (std::size_t k = 0; k <= n; ++k) points.push_back(alpha(k));
        // b(k)0(1) are pairwise distinct points of P_infinity.
        for (std::size_t k = 0; mixed && k < n; ++k) points.emplace_back(b(k) + Word::parse("0"), Word::parse("1"));
        std::vector<SpacePoint> out;
        for (const auto& p : points) {
            switch (r.space()) {
                case Space::Cantor:
                    out.push_back(SpacePoint::cantor(p));
                    break;
                case Space::D2xCantor:
                    out.push_back(SpacePoint::d2(0, p));
                    out.push_back(SpacePoint::d2(1, p));
                    break;
                case Space::Sseq:
                    out.push_back(SpacePoint::sseq(p == Point() ? p : p.cons(1)));
                    break;
                default:
                    throw DomainError("alpha and mixed vertex sets need a Cantor-type space");
            }
        }
        return out;
    }
    std::vector<SpacePoint> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(SpacePoint::parse(r.space(), item));
    return out;
}

std::vector<Item> suite_acyclic(const std::string& spec, const std::string& vertices) {
    RelationSpec r = RelationSpec::parse(spec);
    auto vs = parse_vertices(r, vertices);
    auto cycle = acyclicity_check(r, vs);
    Json detail{{"vertices", vs.size()}};
    if (cycle) {
        Json c = Json::array();
        for (const auto& v : *cycle) c.push_back(v.str());
        detail["cycle"] = c;
    }
    return {{"s(" + r.str() + ") acyclic on " + std::to_string(vs.size()) + " vertices", !cycle, detail}};
}

Json profile_json(const Profile& p) {
    return Json{{"reflexive", p.reflexive},
                {"irreflexive", p.irreflexive},
                {"symmetric", p.symmetric},
                {"antisymmetric", p.antisymmetric},
                {"transitive", p.transitive}};
}

std::vector<Item> suite_ac_profile() {
    std::vector<Item> items;
    for (const auto& e : catalog_Ac()) {
        auto vs = standard_vertices(e.spec.space());
        Profile p = structural_profile(e.spec, vs);
        items.push_back({"E" + std::to_string(e.index) + " " + e.name + " profile", p == e.flags,
                         p == e.flags ? Json() : Json{{"expected", profile_json(e.flags)}, {"actual", profile_json(p)}}});
        if (e.graph) {
            items.push_back({"E" + std::to_string(e.index) + " is a graph", p.symmetric && p.irreflexive, Json()});
        }
    }
    for (const auto& g : {GammaClass::sigma02(), GammaClass::pi02()}) {
        RelationSpec gm = RelationSpec::parse("Gm:gamma=" + g.name());
        RelationSpec om = RelationSpec::parse("Om:gamma=" + g.name());
        auto vs = standard_vertices(Space::D2xCantor);
        bool same = true;
        for (const auto& u : vs) {
            for (const auto& v : vs) same = same && eval(gm, u, v) == (eval(om, u, v) || eval(om, v, u));
        }
        items.push_back({"Gm = s(Om) for " + g.name(), same, Json()});
    }
    return items;
}

// ---- command handlers -------------------------------------------------------

Outcome value_outcome(const Json& value) {
    Outcome o;
    o.result = value;
    o.text = scalar_line(value);
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pair invariant, Ramsey coloring and relation catalog tools", "qramsey"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    bool json = false;
    bool csv = false;
    std::function<Outcome()> action;
    Json inputs = Json::object();
    std::string command;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit the JSON result envelope"); };

    // invariant i <word> <word>
    std::string w1, w2;
    auto* inv = app.add_subcommand("invariant", "Pair invariant on Q-words");
    inv->require_subcommand(1);
    auto* inv_i = inv->add_subcommand("i", "i(z, t)");
    inv_i->add_option("z", w1)->required();
    inv_i->add_option("t", w2)->required();
    add_json(inv_i);
    inv_i->callback([&] {
        command = "invariant i";
        inputs = Json{{"z", w1}, {"t", w2}};
        action = [&] { return value_outcome(invariant_i(QWord::parse(w1), QWord::parse(w2))); };
    });

    auto* osc_cmd = app.add_subcommand("osc", "Oscillation of two finite sets");
    osc_cmd->add_option("z", w1)->required();
    osc_cmd->add_option("t", w2)->required();
    add_json(osc_cmd);
    osc_cmd->callback([&] {
        command = "osc";
        inputs = Json{{"z", w1}, {"t", w2}};
        action = [&] { return value_outcome(osc(Word::parse(w1), Word::parse(w2))); };
    });

    // color pair / color table
    std::size_t max_index = 8;
    auto* color = app.add_subcommand("color", "Coloring of pairs of rationals");
    color->require_subcommand(1);
    auto* pair = color->add_subcommand("pair", "c({x, y})");
    pair->add_option("x", w1)->required();
    pair->add_option("y", w2)->required();
    add_json(pair);
    pair->callback([&] {
        command = "color pair";
        inputs = Json{{"x", w1}, {"y", w2}};
        action = [&] { return value_outcome(color_c(Point::parse(w1), Point::parse(w2))); };
    });
    auto* table = color->add_subcommand("table", "Colors of all pairs alpha_a, alpha_b with a < b <= N");
    table->add_option("--max-index", max_index, "Largest alpha index")->required();
    table->add_flag("--csv", csv, "CSV output");
    add_json(table);
    table->callback([&] {
        command = "color table";
        inputs = Json{{"max_index", max_index}};
        action = [&] {
            Outcome o;
            o.result = Json::array();
            std::ostringstream text;
            text << (csv ? "a,b,color\n" : "");
            for (std::size_t b = 1; b <= max_index; ++b) {
                for (std::size_t a = 0; a < b; ++a) {
                    std::size_t c = color_c(alpha(a), alpha(b));
                    o.result.push_back(Json{{"a", a}, {"b", b}, {"color", c}});
                    text << a << (csv ? "," : " ") << b << (csv ? "," : " ") << c << '\n';
                }
            }
            o.text = text.str();
            return o;
        };
    });

    // relation eval <spec> <pt> <pt>
    std::string spec_text;
    auto* relation = app.add_subcommand("relation", "Relation evaluators");
    relation->require_subcommand(1);
    auto* rel_eval = relation->add_subcommand("eval", "Membership of a pair in a relation");
    rel_eval->add_option("spec", spec_text)->required();
    rel_eval->add_option("u", w1)->required();
    rel_eval->add_option("v", w2)->required();
    add_json(rel_eval);
    rel_eval->callback([&] {
        command = "relation eval";
        inputs = Json{{"spec", spec_text}, {"u", w1}, {"v", w2}};
        action = [&] {
            RelationSpec r = RelationSpec::parse(spec_text);
            return value_outcome(eval(r, SpacePoint::parse(r.space(), w1), SpacePoint::parse(r.space(), w2)));
        };
    });

    // antichain enum
    std::string family;
    bool count_only = false;
    auto* antichain = app.add_subcommand("antichain", "Antichain-basis code families");
    antichain->require_subcommand(1);
    auto* aenum = antichain->add_subcommand("enum", "Enumerate a code family");
    aenum->add_option("--family", family, "P, A, Cpi02, N, V, H, S, C or Ac")->required();
    auto* count_flag = aenum->add_flag("--count", count_only, "Print the cardinality only");
    aenum->add_flag("--csv", csv, "CSV listing")->excludes(count_flag);
    add_json(aenum);
    aenum->callback([&] {
        command = "antichain enum";
        inputs = Json{{"family", family}};
        action = [&] {
            Family f = parse_family(family);
            auto entries = listing(f);
            if (count_only) return value_outcome(entries.size());
            Outcome o;
            Json codes = Json::array();
            std::ostringstream text;
            for (const auto& e : entries) {
                codes.push_back(Json{{"family", e.family}, {"code", e.code}, {"relation", e.spec.str()}});
                text << e.family << ' ' << e.code << ' ' << e.spec.str() << '\n';
            }
            o.result = Json{{"family", family_name(f)}, {"count", entries.size()}, {"codes", codes}};
            o.text = csv ? to_csv(entries) : text.str();
            return o;
        };
    });

    // embed build
    std::string preset = "pf";
    std::size_t depth = 2;
    std::size_t bound = 10000;
    auto* embed = app.add_subcommand("embed", "Cantor scheme embedding");
    embed->require_subcommand(1);
    auto* build = embed->add_subcommand("build", "Build the scheme");
    build->add_option("--h", preset, "H preset: pf, cyl:<word> or double")->required();
    build->add_option("--depth", depth, "Scheme depth")->required();
    build->add_option("--bound", bound, "Search bound per choice");
    add_json(build);
    build->callback([&] {
        command = "embed build";
        inputs = Json{{"h", preset}, {"depth", depth}, {"bound", bound}};
        action = [&] {
            EmbedOptions opt;
            opt.bound = bound;
            EmbeddingScheme e = build_embedding(hspec_preset(preset), depth, opt);
            Outcome o;
            o.result = Json::parse(e.to_json());
            std::ostringstream text;
            for (const auto& [t, node] : e.nodes) {
                text << t.str() << ' ' << node.n.str() << ' ' << node.z.str() << ' ' << node.s.str() << '\n';
            }
            o.text = text.str();
            return o;
        };
    });

    // verify <suite>
    std::string suite;
    std::size_t max_p = 24, max_s = 6, alpha_p = 16, trials = 1000, max_len = 12;
    std::uint64_t seed = 1;
    std::string vertices = "standard";
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "cardinalities, i-vectors, cycles, surjectivity, suff, embed, acyclic, ac-profile")
        ->required()
        ->check(CLI::IsMember({"cardinalities", "i-vectors", "cycles", "surjectivity", "suff", "embed", "acyclic",
                               "ac-profile"}));
    verify->add_option("--max-p", max_p, "Largest color (cycles, surjectivity)");
    verify->add_option("--max-s", max_s, "Largest |s| (surjectivity)");
    verify->add_option("--alpha-p", alpha_p, "Colors required among alpha pairs (surjectivity)")->check(CLI::Range(1, 16));
    verify->add_option("--max-len", max_len, "Exhaustive word length (i-vectors)");
    verify->add_option("--depth", depth, "Scheme depth (embed)");
    verify->add_option("--trials", trials, "Random tables (suff)");
    verify->add_option("--seed", seed, "Random seed (suff)");
    verify->add_option("--h", preset, "H preset (embed)");
    verify->add_option("--relation", spec_text, "Relation spec (acyclic)");
    verify->add_option("--vertices", vertices, "standard, k:<n>, alpha:<n>, mixed:<n> or ';'-separated literals (acyclic)");
    add_json(verify);
    verify->callback([&] {
        command = "verify " + suite;
        action = [&] {
            std::vector<Item> items;
            if (suite == "cardinalities") {
                items = suite_cardinalities();
            } else if (suite == "i-vectors") {
                inputs = Json{{"max_len", max_len}};
                items = suite_i_vectors(max_len);
            } else if (suite == "cycles") {
                inputs = Json{{"max_p", max_p}};
                items = suite_cycles(max_p);
            } else if (suite == "surjectivity") {
                inputs = Json{{"max_p", max_p}, {"max_s", max_s}, {"alpha_p", alpha_p}};
                items = suite_surjectivity(max_p, max_s, alpha_p);
            } else if (suite == "suff") {
                inputs = Json{{"trials", trials}, {"seed", seed}};
                items = suite_suff(trials, seed);
            } else if (suite == "embed") {
                inputs = Json{{"h", preset}, {"depth", depth}};
                items = suite_embed(preset, depth);
            } else if (suite == "acyclic") {
                if (spec_text.empty()) throw DomainError("verify acyclic requires --relation");
                inputs = Json{{"relation", spec_text}, {"vertices", vertices}};
                items = suite_acyclic(spec_text, vertices);
            } else {
                items = suite_ac_profile();
            }
            return suite_outcome(items);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    if (!action) {
        err << "no command given\n";
        return kExitUsage;
    }

    Outcome o;
    try {
        o = action();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: precondition (" << e.clause() << "): " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SearchExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (json) {
        Json envelope{{"command", command}, {"inputs", inputs}, {"result", o.result}, {"details", o.details}};
        out << envelope.dump(2) << '\n';
    } else {
        out << o.text;
    }
    return o.code;
}

}  // namespace qramsey::cli
