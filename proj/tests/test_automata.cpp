#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tcw/errors.hpp"

using namespace tcw;
using namespace tcw::testing;

TEST_CASE("canonical minimization collapses an inflated automaton") {
    // Two redundant copies of the two-state automaton of a* b (a|b)*.
    Dfa d;
    d.alphabet = alpha_ab();
    d.state_count = 4;
    d.start = 0;
    d.accepting = {false, true, false, true};
    d.next = {
        2, 1,  // 0: a->0' b->1
        1, 3,  // 1
        0, 3,  // 2 (copy of 0)
        3, 1,  // 3 (copy of 1)
    };
    Dfa m = minimize_canonical(d);
    CHECK(m.state_count == 2);
    CHECK(m.start == 0);
    CHECK(m.accepting == std::vector<bool>{false, true});
    CHECK(same_dfa(m, minimize_canonical(m)));  // idempotent
    CHECK(same_dfa(m, lang_l1()));
}

TEST_CASE("state complexity counts the sink") {
    CHECK(state_complexity(lang_l1()) == 2);
    CHECK(state_complexity(lang_l6()) == 3);  // start, accept, sink
    CHECK(state_complexity(lang_l8()) == 4);  // start plus residues mod 3, no sink
    CHECK(state_complexity(dfa_empty(alpha_ab())) == 1);
    CHECK(state_complexity(dfa_universal(alpha_ab())) == 1);
    CHECK(state_complexity(dfa_finite(alpha_ab(), {{}})) == 2);
    for (unsigned n = 2; n <= 6; ++n) CHECK(state_complexity(lang_l3(n)) == n + 1);
}

TEST_CASE("determinization handles eps moves and respects the state budget") {
    Dfa four = regex_compile("(a | b)* b (a | b)", alpha_ab());
    CHECK(four.state_count == 4);

    Nfa big = nfa_blank(alpha_ab());
    for (int i = 0; i < 12; ++i) big.add_state(i == 11);
    // (a|b)* b (a|b)^11 forces 2^11 subset states.
    big.add_move(0, 0, 0);
    big.add_move(0, 1, 0);
    big.add_move(0, 1, 1);
    for (uint32_t i = 1; i < 11; ++i)
        for (uint32_t s = 0; s < 2; ++s) big.add_move(i, s, i + 1);
    big.starts = {0};
    CHECK_THROWS_AS(determinize(big, 100), ResourceError);
    CHECK_NOTHROW(determinize(big, 5000));
}

TEST_CASE("combine and complement produce canonical minimal results") {
    Dfa l1 = lang_l1();
    Dfa astar = regex_compile("a*", alpha_ab());
    Dfa uni = combine(l1, astar, SetOp::set_union);
    // a*b(a|b)* union a* is everything.
    CHECK(same_dfa(uni, dfa_universal(alpha_ab())));
    CHECK(same_dfa(combine(l1, astar, SetOp::set_intersection), dfa_empty(alpha_ab())));
    CHECK(same_dfa(combine(uni, l1, SetOp::set_difference), astar));
    CHECK(same_dfa(complement(l1), astar));
    CHECK(same_dfa(complement(complement(l1)), l1));
    CHECK_THROWS_AS(combine(l1, lang_l2(), SetOp::set_union), ValidationError);
}

TEST_CASE("equivalence returns the least word of the symmetric difference") {
    Dfa l1_abc = regex_compile("a* b (a | b)*", alpha_abc());
    Dfa l2 = lang_l2();
    EquivResult r = equivalent(l1_abc, l2);
    REQUIRE_FALSE(r.equal);
    REQUIRE(r.witness.has_value());

    // Independent recomputation: least member of the symmetric difference.
    Word expect;
    bool found = false;
    for (const Word& w : all_words(alpha_abc(), 4)) {
        if (l1_abc.accepts(w) != l2.accepts(w)) {
            expect = w;
            found = true;
            break;
        }
    }
    REQUIRE(found);
    CHECK(*r.witness == expect);
    CHECK(*r.witness == wd({"a"}));

    CHECK(equivalent(lang_l1(), lang_l1()).equal);
    EquivResult lam = equivalent(dfa_universal(alpha_ab()), lang_l1());
    REQUIRE_FALSE(lam.equal);
    CHECK(lam.witness->empty());  // the empty word separates them
}

TEST_CASE("enumeration is length-then-lex and matches brute membership") {
    Dfa l2 = lang_l2();
    std::vector<Word> got = enumerate_dfa(l2, 2);
    std::vector<Word> expect = {wd({"a"}), wd({"a", "a"}), wd({"a", "c"}), wd({"b", "a"}), wd({"b", "c"})};
    CHECK(got == expect);

    for (const Dfa& d : {lang_l1(), lang_l2(), lang_l7(), lang_l9(2)}) {
        std::vector<Word> listed = enumerate_dfa(d, 5);
        std::vector<Word> brute;
        for (const Word& w : all_words(d.alphabet, 5))
            if (d.accepts(w)) brute.push_back(w);
        CHECK(listed == brute);
        // monotone in the bound
        std::vector<Word> shorter = enumerate_dfa(d, 4);
        CHECK(std::equal(shorter.begin(), shorter.end(), listed.begin()));
    }
    CHECK(enumerate_dfa(lang_l4(3), 64) == std::vector<Word>{Word(3, Symbol::intern("a"))});
}

TEST_CASE("suffix language and suffix closure") {
    Dfa l7 = lang_l7();
    Dfa suf = suffix_language(l7);
    CHECK(suf.accepts({}));  // some word of L7 exists, so the empty suffix is there
    CHECK(suf.accepts(wd({"a"})));
    CHECK(suf.accepts(wd({"b", "a"})));
    CHECK_FALSE(suf.accepts(wd({"a", "b"})));
    CHECK_FALSE(is_suffix_closed(l7));

    CHECK(is_suffix_closed(regex_compile("b*", alpha_ab())));
    CHECK(is_suffix_closed(dfa_universal(alpha_ab())));
    CHECK(is_suffix_closed(dfa_empty(alpha_ab())));
    CHECK(same_dfa(suffix_language(dfa_empty(alpha_ab())), dfa_empty(alpha_ab())));
}

TEST_CASE("finiteness check with member extraction") {
    std::vector<Word> words;
    CHECK(finite_language(lang_l3(4), &words));
    CHECK(words == std::vector<Word>{wd({"a1", "a2", "a3"})});
    CHECK(finite_language(dfa_empty(alpha_ab()), &words));
    CHECK(words.empty());
    CHECK_FALSE(finite_language(lang_l1(), nullptr));
    CHECK_FALSE(finite_language(lang_l8(), nullptr));
}

TEST_CASE("minimization agrees with the double-reversal oracle on random automata") {
    std::mt19937 rng(5225);
    for (int round = 0; round < 120; ++round) {
        Nfa n = random_nfa(rng, alpha_ab(), 6);
        Dfa moore = determinize_minimize(n);
        Dfa doubled = brzozowski_minimal(n);
        CHECK(same_dfa(moore, doubled));
        CHECK(same_dfa(moore, minimize_canonical(moore)));
    }
}

TEST_CASE("equivalence agrees with canonical-form identity on random pairs") {
    std::mt19937 rng(90125);
    int equal_seen = 0;
    for (int round = 0; round < 80; ++round) {
        Dfa a = determinize_minimize(random_nfa(rng, alpha_ab(), 4));
        Dfa b = determinize_minimize(random_nfa(rng, alpha_ab(), 4));
        EquivResult r = equivalent(a, b);
        CHECK(r.equal == same_dfa(a, b));
        if (r.equal) {
            ++equal_seen;
            continue;
        }
        REQUIRE(r.witness.has_value());
        CHECK(a.accepts(*r.witness) != b.accepts(*r.witness));
        // No word strictly before the witness separates the automata.
        for (const Word& w : all_words(alpha_ab(), r.witness->size())) {
            if (w == *r.witness) break;
            CHECK(a.accepts(w) == b.accepts(w));
        }
    }
    CHECK(equal_seen > 0);  // the seed produces both outcomes
}
