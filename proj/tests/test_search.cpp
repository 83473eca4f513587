#include "doctest.h"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcw/errors.hpp"
#include "tcw/ops.hpp"
#include "tcw/regex.hpp"
#include "tcw/rlg.hpp"
#include "tcw/rlg_search.hpp"

#include "helpers.hpp"

using namespace tcw;
using namespace tcw::testing;

namespace {

std::vector<std::string> printed_rules(const RightLinearGrammar& g) {
    std::vector<std::string> out;
    for (const RlgRule& r : g.rules) out.push_back(print_rlg_rule(r));
    return out;
}

// Naming-invariant part of the solution ordering: rule count, total body
// length, then the sorted list of bodies in length-then-lex order.
struct InvKey {
    std::size_t count = 0;
    std::size_t total = 0;
    std::vector<std::vector<uint32_t>> bodies;

    bool operator==(const InvKey&) const = default;
};

bool body_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool invkey_less(const InvKey& x, const InvKey& y) {
    if (x.count != y.count) return x.count < y.count;
    if (x.total != y.total) return x.total < y.total;
    return std::lexicographical_compare(x.bodies.begin(), x.bodies.end(), y.bodies.begin(),
                                        y.bodies.end(), body_less);
}

InvKey invariant_key(const RightLinearGrammar& g) {
    InvKey k;
    k.count = g.rules.size();
    for (const RlgRule& r : g.rules) {
        k.total += r.body.size();
        std::vector<uint32_t> b;
        for (Symbol s : r.body) b.push_back(*g.terminals.index_of(s));
        k.bodies.push_back(std::move(b));
    }
    std::sort(k.bodies.begin(), k.bodies.end(), body_less);
    return k;
}

// Exhaustive enumeration of every grammar within the budget whose rule
// bodies are factors of the target language: the reference answer for both
// "none within budget" verdicts and least-solution keys.
struct BruteResult {
    uint64_t candidates = 0;
    uint64_t solutions = 0;
    std::optional<InvKey> least;
};

BruteResult brute_search(const Dfa& target, const SearchBudget& budget) {
    Dfa goal = minimize_canonical(target);
    std::vector<Symbol> vars;
    for (uint32_t i = 0; i < budget.max_vars; ++i)
        vars.push_back(fresh_symbol(i == 0 ? "S" : "X" + std::to_string(i), goal.alphabet.symbols()));

    std::vector<RlgRule> pool;
    for (Symbol lhs : vars)
        for (const Word& body : factors_upto(goal, budget.max_rhs_len)) {
            for (Symbol nxt : vars) {
                if (body.empty() && nxt == lhs) continue;
                pool.push_back({lhs, body, nxt});
            }
            pool.push_back({lhs, body, std::nullopt});
        }

    BruteResult res;
    RightLinearGrammar g;
    g.vars = vars;
    g.terminals = goal.alphabet;
    g.start = vars[0];
    auto evaluate = [&]() {
        ++res.candidates;
        if (!equivalent(rlg_compile(g), goal).equal) return;
        ++res.solutions;
        InvKey k = invariant_key(g);
        if (!res.least || invkey_less(k, *res.least)) res.least = std::move(k);
    };
    // Every subset of the pool with at most max_prods rules.
    auto choose = [&](auto&& self, std::size_t from) -> void {
        evaluate();
        if (g.rules.size() == budget.max_prods) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            g.rules.push_back(pool[i]);
            self(self, i + 1);
            g.rules.pop_back();
        }
    };
    choose(choose, 0);
    return res;
}

uint64_t binomial_total(uint64_t pool, uint64_t max_take) {
    uint64_t sum = 0;
    for (uint64_t k = 0; k <= max_take && k <= pool; ++k) {
        uint64_t c = 1;
        for (uint64_t j = 0; j < k; ++j) c = c * (pool - j) / (j + 1);
        sum += c;
    }
    return sum;
}

void check_within_budget(const RightLinearGrammar& g, const SearchBudget& b) {
    CHECK(g.vars.size() <= b.max_vars);
    CHECK(g.rules.size() <= b.max_prods);
    for (const RlgRule& r : g.rules) CHECK(r.body.size() <= b.max_rhs_len);
}

}  // namespace

TEST_CASE("single-rule grammar for the one-letter word") {
    SearchResult r = search_rlg(lang_l6(), {1, 1, 1});
    REQUIRE(r.grammar.has_value());
    CHECK(printed_rules(*r.grammar) == std::vector<std::string>{"S -> a"});
    CHECK(r.grammar->vars == std::vector<Symbol>{Symbol::intern("S")});
    CHECK(equivalent(rlg_compile(*r.grammar), lang_l6()).equal);
}

TEST_CASE("triple-a blocks need one looping and one terminating rule") {
    SearchResult r = search_rlg(lang_l8(), {1, 2, 3});
    REQUIRE(r.grammar.has_value());
    CHECK(printed_rules(*r.grammar) == std::vector<std::string>{"S -> a a a S", "S -> a a a"});
    CHECK(equivalent(rlg_compile(*r.grammar), lang_l8()).equal);
    check_within_budget(*r.grammar, {1, 2, 3});
}

TEST_CASE("no single-variable grammar generates a b* a | a") {
    SearchResult r = search_rlg(lang_l7(), {1, 6, 4});
    CHECK_FALSE(r.grammar.has_value());
    CHECK(r.states > 0);
}

TEST_CASE("single word a^n from a single rule") {
    SearchResult r = search_rlg(lang_l4(3), {1, 1, 3});
    REQUIRE(r.grammar.has_value());
    CHECK(printed_rules(*r.grammar) == std::vector<std::string>{"S -> a a a"});
}

TEST_CASE("universal language needs one rule per letter plus a terminator") {
    for (unsigned n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK_FALSE(search_rlg(lang_l5(n), {n, n, 4}).grammar.has_value());
        SearchResult r = search_rlg(lang_l5(n), {n, n + 1, 4});
        REQUIRE(r.grammar.has_value());
        CHECK(r.grammar->rules.size() == n + 1);
        CHECK(r.grammar->vars.size() == 1);
        CHECK(equivalent(rlg_compile(*r.grammar), lang_l5(n)).equal);
    }
}

TEST_CASE("two variables split a1+ a2+ into its layers") {
    SearchResult r = search_rlg(lang_l9(1), {2, 4, 1});
    REQUIRE(r.grammar.has_value());
    CHECK(printed_rules(*r.grammar) ==
          std::vector<std::string>{"S -> a1 S", "S -> a1 X1", "X1 -> a2 X1", "X1 -> a2"});
    CHECK(equivalent(rlg_compile(*r.grammar), lang_l9(1)).equal);
    CHECK_FALSE(search_rlg(lang_l9(1), {1, 4, 2}).grammar.has_value());
}

TEST_CASE("brute-force enumeration confirms search verdicts and least keys") {
    struct Fixture {
        const char* name;
        Dfa language;
        SearchBudget budget;
        uint64_t pool_size;
    };
    // Pool sizes are |vars| * |factors| * (|vars| + 1) minus the excluded
    // empty-bodied self-loops, recomputed below from first principles.
    std::vector<Fixture> fixtures;
    fixtures.push_back({"one-letter word", lang_l6(), {1, 1, 1}, 3});
    fixtures.push_back({"a^3", lang_l4(3), {1, 1, 3}, 7});
    fixtures.push_back({"triple-a blocks", lang_l8(), {1, 2, 3}, 7});
    fixtures.push_back({"a b* a | a", lang_l7(), {1, 2, 4}, 29});
    fixtures.push_back({"two-letter universal", lang_l5(2), {2, 2, 4}, 184});
    fixtures.push_back({"a1+ a2+", lang_l9(1), {2, 4, 1}, 16});

    for (const Fixture& f : fixtures) {
        CAPTURE(f.name);
        uint64_t factor_count = factors_upto(f.language, f.budget.max_rhs_len).size();
        uint64_t expected_pool =
            f.budget.max_vars * factor_count * (f.budget.max_vars + 1) - f.budget.max_vars;
        CHECK(expected_pool == f.pool_size);

        BruteResult brute = brute_search(f.language, f.budget);
        CHECK(brute.candidates == binomial_total(f.pool_size, f.budget.max_prods));

        SearchResult r = search_rlg(f.language, f.budget);
        if (brute.solutions == 0) {
            CHECK_FALSE(r.grammar.has_value());
        } else {
            REQUIRE(r.grammar.has_value());
            check_within_budget(*r.grammar, f.budget);
            CHECK(equivalent(rlg_compile(*r.grammar), f.language).equal);
            InvKey key = invariant_key(*r.grammar);
            CHECK(key == *brute.least);
        }
    }
}

TEST_CASE("parallel search returns the serial answer") {
    struct Fixture {
        Dfa language;
        SearchBudget budget;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({lang_l8(), {1, 2, 3}});
    fixtures.push_back({lang_l9(1), {2, 4, 1}});
    fixtures.push_back({lang_l5(2), {2, 3, 4}});
    fixtures.push_back({lang_l7(), {1, 6, 4}});
    for (const Fixture& f : fixtures) {
        SearchResult serial = search_rlg(f.language, f.budget);
        SearchResult parallel = search_rlg(f.language, f.budget, {.exec = Exec::parallel});
        CHECK(serial.grammar.has_value() == parallel.grammar.has_value());
        if (serial.grammar)
            CHECK(printed_rules(*serial.grammar) == printed_rules(*parallel.grammar));
    }
}

TEST_CASE("serial search is deterministic") {
    SearchResult a = search_rlg(lang_l9(1), {2, 4, 1});
    SearchResult b = search_rlg(lang_l9(1), {2, 4, 1});
    CHECK(a.states == b.states);
    CHECK(printed_rules(*a.grammar) == printed_rules(*b.grammar));
}

TEST_CASE("state cap raises a resource error") {
    CHECK_THROWS_AS(search_rlg(lang_l8(), {1, 2, 3}, {.state_cap = 3}), ResourceError);
}

TEST_CASE("budget components must be positive and variables bounded") {
    CHECK_THROWS_AS(search_rlg(lang_l6(), {0, 1, 1}), ValidationError);
    CHECK_THROWS_AS(search_rlg(lang_l6(), {1, 0, 1}), ValidationError);
    CHECK_THROWS_AS(search_rlg(lang_l6(), {1, 1, 0}), ValidationError);
    CHECK_THROWS_AS(search_rlg(lang_l6(), {32, 1, 1}), ValidationError);
}

TEST_CASE("empty language solved by the empty rule set") {
    Dfa none = regex_compile("%empty", alpha_ab());
    SearchResult r = search_rlg(none, {1, 1, 1});
    REQUIRE(r.grammar.has_value());
    CHECK(r.grammar->rules.empty());
    CHECK(r.grammar->vars == std::vector<Symbol>{Symbol::intern("S")});
    CHECK(equivalent(rlg_compile(*r.grammar), none).equal);
}

TEST_CASE("the empty word alone needs one empty-bodied rule") {
    Dfa eps = regex_compile("%eps", alpha_ab());
    SearchResult r = search_rlg(eps, {1, 1, 1});
    REQUIRE(r.grammar.has_value());
    CHECK(printed_rules(*r.grammar) == std::vector<std::string>{"S -> %eps"});
}

TEST_CASE("start variable dodges a terminal named S") {
    Alphabet v = Alphabet::parse("S");
    Dfa d = dfa_finite(v, {wd({"S"})});
    SearchResult r = search_rlg(d, {1, 1, 1});
    REQUIRE(r.grammar.has_value());
    CHECK(r.grammar->start == Symbol::intern("_S"));
    CHECK(printed_rules(*r.grammar) == std::vector<std::string>{"_S -> S"});
}
