#include <map>
#include <set>
#include <string>
#include <utility>

#include "doctest.h"
#include "helpers.hpp"
#include "tcw/errors.hpp"
#include "tcw/io.hpp"
#include "tcw/ops.hpp"
#include "tcw/tc.hpp"

using namespace tcw;
using namespace tcw::testing;

namespace {

Cfg doubling_core() {
    Cfg g;
    g.vars = {Symbol::intern("S")};
    g.terminals = alpha_a();
    g.start = Symbol::intern("S");
    g.rules = {{Symbol::intern("S"), wd({"S", "S"})}, {Symbol::intern("S"), wd({"a"})}};
    return g;
}

Cfg triple_core() {
    Cfg g;
    g.vars = {Symbol::intern("S"), Symbol::intern("A"), Symbol::intern("B"), Symbol::intern("C")};
    g.terminals = alpha_abc();
    g.start = Symbol::intern("S");
    auto rule = [](const char* lhs, std::initializer_list<const char*> body) {
        return CfgRule{Symbol::intern(lhs), make_word(body)};
    };
    g.rules = {rule("S", {"a", "A", "b", "B", "c", "C"}),
               rule("A", {"a", "A"}), rule("A", {"a"}),
               rule("B", {"b", "B"}), rule("B", {"b"}),
               rule("C", {"c", "C"}), rule("C", {"c"})};
    return g;
}

TcGrammar with_control(Cfg core, const std::string& expr) {
    TcGrammar g;
    g.control = regex_compile(expr, tc_level_alphabet(core));
    g.core = std::move(core);
    return g;
}

TcGrammar grammar_g1() { return with_control(doubling_core(), "S*"); }
TcGrammar grammar_g2() { return with_control(triple_core(), "S | a A b B c C"); }

// The grammar whose only derivation is the two-level tree S, %eps.
TcGrammar erasing_root(const std::string& control_expr) {
    Cfg g;
    g.vars = {Symbol::intern("S")};
    g.terminals = alpha_a();
    g.start = Symbol::intern("S");
    g.rules = {{Symbol::intern("S"), {}}, {Symbol::intern("S"), wd({"a"})}};
    return with_control(std::move(g), control_expr);
}

LevelConfig config_of(std::initializer_list<std::pair<const char*, bool>> cells, std::uint32_t depth) {
    LevelConfig c;
    c.depth = depth;
    for (auto& [name, frozen] : cells) c.cells.push_back({Symbol::intern(name), frozen});
    return c;
}

std::vector<TraceStep> level(std::initializer_list<TraceStep> steps) { return steps; }

TraceStep st(std::uint32_t pos, const char* nt, std::initializer_list<const char*> body) {
    return {pos, Symbol::intern(nt), make_word(body)};
}

Word a_pow(std::size_t n) { return Word(n, Symbol::intern("a")); }

Word abc_word(std::size_t n) {
    Word w;
    for (auto* name : {"a", "b", "c"})
        for (std::size_t i = 0; i < n; ++i) w.push_back(Symbol::intern(name));
    return w;
}

// Reference semantics, written against the definition rather than the
// implementation: grow whole derivation trees level by level with no visited
// set and no control-guided pruning. A sentential form is a list of symbols
// tagged "born this level"; the level word is the born symbols, the final
// level is the one whose born symbols contain no nonterminal.
struct TreeWalk {
    const Cfg& core;
    const Dfa& control;
    std::size_t max_len;
    unsigned max_depth;
    std::set<Word> out;

    using Form = std::vector<std::pair<Symbol, bool>>;

    void run() { step({{core.start, true}}, 0); }

    void step(const Form& form, unsigned depth) {
        if (depth > 0 && form.size() > max_len) return;  // non-erasing: forms never shrink again
        Word level;
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i < form.size(); ++i) {
            if (!form[i].second) continue;
            level.push_back(form[i].first);
            if (core.is_var(form[i].first)) sites.push_back(i);
        }
        if (sites.empty()) {
            Word w;
            for (const auto& [s, born] : form) w.push_back(s);
            if (w.size() <= max_len) out.insert(w);
            return;
        }
        if (!control.accepts(level) || depth == max_depth) return;
        std::map<std::size_t, const CfgRule*> chosen;
        descend(form, sites, 0, depth, chosen);
    }

    void descend(const Form& form, const std::vector<std::size_t>& sites, std::size_t site, unsigned depth,
                 std::map<std::size_t, const CfgRule*>& chosen) {
        if (site == sites.size()) {
            Form next;
            for (std::size_t i = 0; i < form.size(); ++i) {
                auto it = chosen.find(i);
                if (it == chosen.end()) {
                    next.push_back({form[i].first, false});
                } else {
                    for (Symbol s : it->second->body) next.push_back({s, true});
                }
            }
            step(next, depth + 1);
            return;
        }
        for (const CfgRule* r : core.rules_for(form[sites[site]].first)) {
            chosen[sites[site]] = r;
            descend(form, sites, site + 1, depth, chosen);
        }
        chosen.erase(sites[site]);
    }
};

std::set<Word> naive_words(const TcGrammar& g, std::size_t max_len, unsigned max_depth) {
    TreeWalk walk{g.core, g.control, max_len, max_depth, {}};
    walk.run();
    return walk.out;
}

std::set<Word> word_set(const TcEnumeration& e) { return {e.words.begin(), e.words.end()}; }

bool equal_enumerations(const TcEnumeration& a, const TcEnumeration& b) {
    return a.words == b.words && a.traces == b.traces && a.stats == b.stats;
}

// Certifies every reported word and checks the trace derives that exact word.
// Along the way this asserts the open corner: no non-final level word is
// empty (the certified replays would reject it otherwise, since an empty
// level word with active nonterminals cannot occur under non-erasing rules).
void check_sound(const TcGrammar& g, const TcEnumeration& e) {
    REQUIRE(e.words.size() == e.traces.size());
    for (std::size_t i = 0; i < e.words.size(); ++i) {
        CertifyResult c = tc_certify(g, e.traces[i]);
        CAPTURE(word_str(e.words[i]));
        CAPTURE(c.diagnostic);
        REQUIRE(c.ok);
        REQUIRE(c.yield == e.words[i]);
    }
}

}  // namespace

TEST_CASE("validation accepts the examples and reports shape defects") {
    CHECK(validate_tc(grammar_g1()).empty());
    CHECK(validate_tc(grammar_g2()).empty());
    CHECK_NOTHROW(grammar_g2().validate());

    SUBCASE("an erasing rule away from the start is rejected") {
        TcGrammar g = grammar_g2();
        g.core.rules.push_back({Symbol::intern("A"), {}});
        std::vector<std::string> v = validate_tc(g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("erasing rule") != std::string::npos);
        CHECK(v[0].find("A -> %eps") != std::string::npos);
        CHECK_THROWS_AS(g.validate(), ValidationError);
    }
    SUBCASE("start erasure is rejected once the start reappears in a body") {
        Cfg core = doubling_core();
        core.rules.push_back({Symbol::intern("S"), {}});
        TcGrammar g;
        g.control = regex_compile("S*", tc_level_alphabet(core));
        g.core = core;
        std::vector<std::string> v = validate_tc(g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("erasing rule") != std::string::npos);
        CHECK(v[0].find("right-hand side") != std::string::npos);
    }
    SUBCASE("the control must read exactly vars plus terminals") {
        TcGrammar g = grammar_g1();
        g.control = regex_compile("S*", Alphabet::parse("S"));
        std::vector<std::string> v = validate_tc(g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("control alphabet mismatch") != std::string::npos);
        g.control = regex_compile("S*", Alphabet::parse("S a b"));
        v = validate_tc(g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("control alphabet mismatch") != std::string::npos);
    }
    SUBCASE("core shape defects are each called out") {
        Cfg g;
        g.vars = {Symbol::intern("S"), Symbol::intern("S"), Symbol::intern("a")};
        g.terminals = alpha_ab();
        g.start = Symbol::intern("T");
        g.rules = {{Symbol::intern("b"), wd({"a"})},
                   {Symbol::intern("S"), wd({"x"})},
                   {Symbol::intern("S"), wd({"x"})}};
        std::vector<std::string> v = cfg_violations(g);
        auto has = [&](const char* text) {
            for (const std::string& msg : v)
                if (msg.find(text) != std::string::npos) return true;
            return false;
        };
        CHECK(has("duplicate variable S"));
        CHECK(has("variable a is also a terminal"));
        CHECK(has("start symbol T is not a variable"));
        CHECK(has("rule lhs b is not a variable"));
        CHECK(has("body symbol x"));
        CHECK(has("duplicate rule S -> x"));
    }
}

TEST_CASE("level configurations expose level word and sentential form") {
    LevelConfig c = config_of({{"a", true}, {"a", false}, {"A", false}, {"b", true}}, 3);
    CHECK(c.active_projection() == wd({"a", "A"}));
    CHECK(c.full_form() == wd({"a", "a", "A", "b"}));
    CHECK(c.has_active_nonterminal(triple_core()));
    CHECK_FALSE(config_of({{"a", true}, {"b", false}}, 1).has_active_nonterminal(triple_core()));
    CHECK(tc_level_alphabet(triple_core()) == Alphabet::parse("S A B C a b c"));
}

TEST_CASE("a step replaces every active nonterminal at once") {
    Cfg core = triple_core();

    SUBCASE("the start configuration has exactly one successor") {
        std::vector<LevelConfig> kids = tc_step(config_of({{"S", false}}, 0), core);
        REQUIRE(kids.size() == 1);
        CHECK(kids[0] == config_of({{"a", false}, {"A", false}, {"b", false}, {"B", false}, {"c", false}, {"C", false}}, 1));
    }
    SUBCASE("three active nonterminals give the full Cartesian choice") {
        LevelConfig c = config_of({{"a", false}, {"A", false}, {"b", false}, {"B", false}, {"c", false}, {"C", false}}, 1);
        std::vector<LevelConfig> kids = tc_step(c, core);
        REQUIRE(kids.size() == 8);
        std::set<std::vector<LevelCell>> distinct;
        for (const LevelConfig& k : kids) {
            CHECK(k.depth == 2);
            distinct.insert(k.cells);
        }
        CHECK(distinct.size() == 8);
        // The growing choice A->aA, B->bB, C->cC keeps the level word stable
        // while the sentential form gains one terminal per block.
        LevelConfig grown = config_of({{"a", true}, {"a", false}, {"A", false},
                                       {"b", true}, {"b", false}, {"B", false},
                                       {"c", true}, {"c", false}, {"C", false}}, 2);
        CHECK(std::count(kids.begin(), kids.end(), grown) == 1);
        CHECK(grown.active_projection() == wd({"a", "A", "b", "B", "c", "C"}));
        CHECK(grown.full_form() == wd({"a", "a", "A", "b", "b", "B", "c", "c", "C"}));
    }
    SUBCASE("a final configuration cannot step") {
        CHECK_THROWS_AS(tc_step(config_of({{"a", true}, {"b", false}}, 2), core), ValidationError);
    }
    SUBCASE("an active nonterminal without rules stalls the branch") {
        Cfg stuck;
        stuck.vars = {Symbol::intern("S"), Symbol::intern("A")};
        stuck.terminals = alpha_a();
        stuck.start = Symbol::intern("S");
        stuck.rules = {{Symbol::intern("S"), wd({"a", "A"})}};
        CHECK(stuck.rules_for(Symbol::intern("A")).empty());
        CHECK(tc_step(config_of({{"a", false}, {"A", false}}, 1), stuck).empty());
    }
}

TEST_CASE("the doubling grammar enumerates exactly the powers of two") {
    TcGrammar g1 = grammar_g1();
    TcEnumeration e = tc_enumerate(g1, 64);
    std::vector<Word> expected;
    for (std::size_t n = 1; n <= 64; n *= 2) expected.push_back(a_pow(n));
    CHECK(e.words == expected);
    check_sound(g1, e);
    // Levels S, S^2, ..., S^64 plus one final level per power: the visited
    // set holds the seven doubling configurations and the seven yields.
    CHECK(e.stats == TcStats{14, 8});

    CHECK(tc_enumerate(g1, 0).words.empty());
    CHECK(tc_enumerate(g1, 1).words == std::vector<Word>{a_pow(1)});
    CHECK(tc_enumerate(g1, 63).words == std::vector<Word>(expected.begin(), expected.end() - 1));
}

TEST_CASE("the synchronized grammar enumerates a^n b^n c^n") {
    TcGrammar g2 = grammar_g2();
    TcEnumeration e = tc_enumerate(g2, 30);
    std::vector<Word> expected;
    for (std::size_t n = 2; n <= 10; ++n) expected.push_back(abc_word(n));
    CHECK(e.words == expected);
    check_sound(g2, e);
    // One spine configuration per depth 0..9 and one final level per word.
    CHECK(e.stats == TcStats{19, 11});

    CHECK(tc_enumerate(g2, 5).words.empty());
    CHECK(tc_enumerate(g2, 6).words == std::vector<Word>{abc_word(2)});
}

TEST_CASE("an empty control rejects the very first level word") {
    Cfg core;
    core.vars = {Symbol::intern("S")};
    core.terminals = alpha_a();
    core.start = Symbol::intern("S");
    core.rules = {{Symbol::intern("S"), wd({"a"})}};
    TcGrammar g;
    g.control = dfa_empty(tc_level_alphabet(core));
    g.core = core;
    REQUIRE(validate_tc(g).empty());
    TcEnumeration e = tc_enumerate(g, 10);
    CHECK(e.words.empty());
    CHECK(e.stats == TcStats{1, 1});
}

TEST_CASE("start erasure derives the empty word through a checked root level") {
    TcEnumeration e = tc_enumerate(erasing_root("S*"), 3);
    REQUIRE(e.words.size() == 2);
    CHECK(e.words[0] == Word{});
    CHECK(e.words[1] == a_pow(1));
    REQUIRE(e.traces[0].levels.size() == 1);
    CHECK(e.traces[0].levels[0] == level({st(0, "S", {})}));
    check_sound(erasing_root("S*"), e);

    // The level word "S" of the two-level tree S, %eps is still checked.
    CHECK(tc_enumerate(erasing_root("%empty"), 3).words.empty());
    CHECK(tc_enumerate(erasing_root("S*"), 0).words == std::vector<Word>{Word{}});
}

TEST_CASE("certification replays the published derivations") {
    TcGrammar g1 = grammar_g1();

    SUBCASE("the tree with levels S, SS, aa is accepted") {
        DerivationTrace t{{level({st(0, "S", {"S", "S"})}),
                           level({st(0, "S", {"a"}), st(1, "S", {"a"})})}};
        CertifyResult c = tc_certify(g1, t);
        CHECK(c.ok);
        CHECK(c.diagnostic.empty());
        CHECK(c.yield == a_pow(2));
        // The same tree dies once the control stops accepting "S S".
        TcGrammar strict = with_control(doubling_core(), "S");
        CertifyResult r = tc_certify(strict, t);
        CHECK_FALSE(r.ok);
        CHECK(r.diagnostic.find("rejected by the control") != std::string::npos);
        CHECK(r.diagnostic.find("S S") != std::string::npos);
    }
    SUBCASE("the three-level a^3 b^3 c^3 derivation is accepted") {
        DerivationTrace t{{level({st(0, "S", {"a", "A", "b", "B", "c", "C"})}),
                           level({st(1, "A", {"a", "A"}), st(3, "B", {"b", "B"}), st(5, "C", {"c", "C"})}),
                           level({st(2, "A", {"a"}), st(5, "B", {"b"}), st(8, "C", {"c"})})}};
        CertifyResult c = tc_certify(grammar_g2(), t);
        CHECK(c.ok);
        CHECK(c.yield == abc_word(3));
    }
    SUBCASE("malformed traces come back with a diagnostic") {
        auto diag = [&](const TcGrammar& g, DerivationTrace t) { return tc_certify(g, std::move(t)); };

        CertifyResult misplaced = diag(g1, {{level({st(1, "S", {"S", "S"})})}});
        CHECK_FALSE(misplaced.ok);
        CHECK(misplaced.diagnostic.find("does not point at") != std::string::npos);

        CertifyResult wrong_symbol = diag(g1, {{level({st(0, "A", {"S", "S"})})}});
        CHECK_FALSE(wrong_symbol.ok);
        CHECK(wrong_symbol.diagnostic.find("holds S") != std::string::npos);

        CertifyResult no_rule = diag(g1, {{level({st(0, "S", {"a", "a"})})}});
        CHECK_FALSE(no_rule.ok);
        CHECK(no_rule.diagnostic.find("no rule S -> a a") != std::string::npos);

        CertifyResult undercovered = diag(g1, {{level({st(0, "S", {"S", "S"})}), level({st(0, "S", {"a"})})}});
        CHECK_FALSE(undercovered.ok);
        CHECK(undercovered.diagnostic.find("rewrites 1 cells but 2") != std::string::npos);

        CertifyResult unfinished = diag(g1, {{level({st(0, "S", {"S", "S"})})}});
        CHECK_FALSE(unfinished.ok);
        CHECK(unfinished.diagnostic.find("nonterminals still active") != std::string::npos);

        CertifyResult overlong = diag(g1, {{level({st(0, "S", {"a"})}), level({st(0, "S", {"a"})})}});
        CHECK_FALSE(overlong.ok);
        CHECK(overlong.diagnostic.find("no active nonterminal") != std::string::npos);

        TcGrammar broken = grammar_g1();
        broken.core.rules.push_back({Symbol::intern("S"), {}});
        CertifyResult bad_grammar = diag(broken, {{level({st(0, "S", {"a"})})}});
        CHECK_FALSE(bad_grammar.ok);
        CHECK(bad_grammar.diagnostic.find("grammar:") != std::string::npos);
    }
}

TEST_CASE("a larger control never loses words") {
    struct Pair {
        TcGrammar small;
        TcGrammar large;
    };
    std::vector<Pair> pairs;
    pairs.push_back({with_control(doubling_core(), "S | S S"), grammar_g1()});
    pairs.push_back({with_control(triple_core(), "S"), grammar_g2()});
    pairs.push_back({grammar_g1(), with_control(doubling_core(), "(S | a)*")});
    for (const Pair& p : pairs) {
        REQUIRE(subset_language(p.small.control, p.large.control));
        for (std::size_t max_len : {0, 2, 4, 6, 8}) {
            std::set<Word> small = word_set(tc_enumerate(p.small, max_len));
            std::set<Word> large = word_set(tc_enumerate(p.large, max_len));
            CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }
}

TEST_CASE("enumeration matches the naive tree walk on small cores") {
    Cfg two_var;
    two_var.vars = {Symbol::intern("S"), Symbol::intern("A")};
    two_var.terminals = alpha_ab();
    two_var.start = Symbol::intern("S");
    two_var.rules = {{Symbol::intern("S"), wd({"a", "A"})},
                     {Symbol::intern("S"), wd({"b"})},
                     {Symbol::intern("A"), wd({"b", "A"})},
                     {Symbol::intern("A"), wd({"a", "S"})},
                     {Symbol::intern("A"), wd({"a"})}};

    std::vector<TcGrammar> grammars;
    for (const char* expr : {"S*", "(S | a)*"}) grammars.push_back(with_control(doubling_core(), expr));
    for (const char* expr : {"(S | A | a | b)*", "(A | a | b)*", "S | a A | b A | a", "%empty"})
        grammars.push_back(with_control(two_var, expr));
    grammars.push_back(erasing_root("S*"));
    grammars.push_back(grammar_g2());

    for (const TcGrammar& g : grammars) {
        REQUIRE(validate_tc(g).empty());
        for (std::size_t max_len = 0; max_len <= 6; ++max_len) {
            TcEnumerateOptions opts;
            opts.max_depth = 6;
            TcEnumeration e = tc_enumerate(g, max_len, opts);
            CHECK(word_set(e) == naive_words(g, max_len, 6));
            check_sound(g, e);
        }
    }
}

TEST_CASE("enumeration is deterministic and the parallel path agrees") {
    std::vector<std::pair<TcGrammar, std::size_t>> jobs = {
        {grammar_g1(), 64}, {grammar_g2(), 30}, {erasing_root("S*"), 4},
        {with_control(doubling_core(), "(S | a)*"), 10}};
    for (const auto& [g, max_len] : jobs) {
        TcEnumeration first = tc_enumerate(g, max_len);
        TcEnumeration second = tc_enumerate(g, max_len);
        CHECK(equal_enumerations(first, second));
        TcEnumerateOptions par;
        par.exec = Exec::parallel;
        TcEnumeration parallel = tc_enumerate(g, max_len, par);
        CHECK(equal_enumerations(first, parallel));
    }
}

TEST_CASE("tc documents round-trip and embed any control kind") {
    TcGrammar g1 = tc_from_doc(parse_doc(read_text_file(fixture_path("g1.tc"))));
    CHECK(validate_tc(g1).empty());
    CHECK(equivalent(g1.control, grammar_g1().control).equal);
    CHECK(g1.core.rules == doubling_core().rules);

    std::string text = print_doc(tc_to_doc(g1));
    CHECK(text ==
          "format: 1\n"
          "kind: tc\n"
          "cfg:\n"
          "  alphabet: a\n"
          "  vars: S\n"
          "  start: S\n"
          "  rules:\n"
          "    S -> S S\n"
          "    S -> a\n"
          "control:\n"
          "  kind: dfa\n"
          "  alphabet: S a\n"
          "  states: 2\n"
          "  start: 0\n"
          "  accepting: 0\n"
          "  delta:\n"
          "    0 S 0\n"
          "    0 a 1\n"
          "    1 S 1\n"
          "    1 a 1\n");
    TcGrammar back = tc_from_doc(parse_doc(text));
    CHECK(back.core.rules == g1.core.rules);
    CHECK(equivalent(back.control, g1.control).equal);

    TcGrammar g2 = tc_from_doc(parse_doc(read_text_file(fixture_path("g2.tc"))));
    CHECK(word_set(tc_enumerate(g2, 12)) == word_set(tc_enumerate(grammar_g2(), 12)));

    SUBCASE("a control block may use any language kind") {
        Doc doc = tc_to_doc(g1);
        for (DocEntry& e : doc.entries) {
            if (e.key != "control") continue;
            e.children.clear();
            for (const DocEntry& child : slt_to_doc(canonical_slt(g1.control, 1)).entries)
                if (child.key != "format") e.children.push_back(child);
        }
        TcGrammar via_slt = tc_from_doc(doc);
        CHECK(equivalent(via_slt.control, g1.control).equal);
    }
    SUBCASE("a grammar that fails validation does not parse") {
        std::string bad = text;
        std::size_t at = bad.find("  alphabet: S a");
        bad.replace(at, 15, "  alphabet: S b");
        CHECK_THROWS_AS(tc_from_doc(parse_doc(bad)), ValidationError);
    }
}

TEST_CASE("cfg documents round-trip and reject malformed rules") {
    Cfg core = triple_core();
    Doc doc = cfg_to_doc(core);
    Cfg back = cfg_from_doc(parse_doc(print_doc(doc)));
    CHECK(back.vars == core.vars);
    CHECK(back.terminals == core.terminals);
    CHECK(back.start == core.start);
    CHECK(back.rules == core.rules);

    Doc eps = cfg_to_doc(erasing_root("S*").core);
    std::string printed = print_doc(eps);
    CHECK(printed.find("S -> %eps\n") != std::string::npos);
    CHECK(cfg_from_doc(parse_doc(printed)).rules[0].body.empty());

    auto parse_cfg_text = [](const std::string& rules) {
        return cfg_from_doc(parse_doc("format: 1\nkind: cfg\nalphabet: a\nvars: S\nstart: S\nrules:\n" + rules));
    };
    CHECK_THROWS_AS(parse_cfg_text("  S = a\n"), ValidationError);
    CHECK_THROWS_AS(parse_cfg_text("  S -> %eps a\n"), ValidationError);
    CHECK_THROWS_AS(parse_cfg_text("  S -> a x\n"), ValidationError);
    CHECK_THROWS_AS(parse_cfg_text("  A -> a\n"), ValidationError);
}
