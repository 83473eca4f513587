#include "doctest.h"
#include "helpers.hpp"
#include "tcw/errors.hpp"
#include "tcw/rlg.hpp"

using namespace tcw;
using namespace tcw::testing;

namespace {

RightLinearGrammar l1_grammar() {
    RightLinearGrammar g;
    g.terminals = alpha_ab();
    Symbol s = Symbol::intern("S"), t = Symbol::intern("T");
    g.vars = {s, t};
    g.start = s;
    g.rules = {
        {s, wd({"a"}), s},
        {s, wd({"b"}), t},
        {t, wd({"a"}), t},
        {t, wd({"b"}), t},
        {t, {}, std::nullopt},
    };
    return g;
}

}  // namespace

TEST_CASE("grammar to automaton") {
    Dfa d = rlg_compile(l1_grammar());
    CHECK(same_dfa(d, lang_l1()));

    // multi-symbol bodies and eps-bodied chain rules
    RightLinearGrammar g;
    g.terminals = alpha_ab();
    Symbol s = Symbol::intern("S"), t = Symbol::intern("T");
    g.vars = {s, t};
    g.start = s;
    g.rules = {
        {s, wd({"a", "b", "a"}), t},
        {s, {}, t},
        {t, wd({"b", "b"}), std::nullopt},
    };
    Dfa d2 = rlg_compile(g);
    CHECK(same_dfa(d2, regex_compile("(a b a | %eps) b b", alpha_ab())));
}

TEST_CASE("grammar validation rejects malformed input") {
    RightLinearGrammar g = l1_grammar();
    CHECK_NOTHROW(g.validate());

    RightLinearGrammar bad = g;
    bad.start = Symbol::intern("Z");
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = g;
    bad.vars.push_back(Symbol::intern("a"));  // clashes with a terminal
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = g;
    bad.rules.push_back({Symbol::intern("S"), wd({"a"}), Symbol::intern("Z")});
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = g;
    bad.rules.push_back({Symbol::intern("Z"), {}, std::nullopt});
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("automaton to grammar and back is the identity on languages") {
    for (const Dfa& d : {lang_l1(), lang_l2(), lang_l6(), lang_l7(), lang_l8(), lang_l9(2), dfa_empty(alpha_ab()), dfa_universal(alpha_ab()), dfa_finite(alpha_ab(), {{}})}) {
        RightLinearGrammar g = dfa_to_rlg(d);
        CHECK_NOTHROW(g.validate());
        CHECK(same_dfa(rlg_compile(g), d));
        // one variable per state, at most one rule per useful edge plus accept rules
        CHECK(g.vars.size() <= d.state_count);
        CHECK(g.rules.size() <= size_t(d.state_count) * d.alphabet.size() + d.state_count);
        for (const RlgRule& r : g.rules) CHECK(r.body.size() <= 1);
    }
}

TEST_CASE("grammar printing") {
    RightLinearGrammar g = l1_grammar();
    CHECK(print_rlg_rule(g.rules[0]) == "S -> a S");
    CHECK(print_rlg_rule(g.rules[4]) == "T -> %eps");
    RlgRule chain{Symbol::intern("S"), {}, Symbol::intern("T")};
    CHECK(print_rlg_rule(chain) == "S -> T");
}

TEST_CASE("fresh symbols avoid every taken name") {
    std::vector<Symbol> taken = {Symbol::intern("Q0"), Symbol::intern("_Q0")};
    Symbol f = fresh_symbol("Q0", taken);
    CHECK(f.name() == "__Q0");
    CHECK(fresh_symbol("R", taken).name() == "R");
}
