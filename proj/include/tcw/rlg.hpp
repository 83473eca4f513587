#pragma once

#include <optional>
#include <vector>

#include "tcw/nfa.hpp"
#include "tcw/ops.hpp"

namespace tcw {

// A rule is lhs -> body next  or  lhs -> body, with body a (possibly empty)
// terminal word.
struct RlgRule {
    Symbol lhs;
    Word body;
    std::optional<Symbol> next;

    bool operator==(const RlgRule&) const = default;
};

struct RightLinearGrammar {
    std::vector<Symbol> vars;
    Alphabet terminals;
    Symbol start;
    std::vector<RlgRule> rules;

    void validate() const;
    std::size_t var_count() const { return vars.size(); }
    std::size_t rule_count() const { return rules.size(); }
};

std::string print_rlg_rule(const RlgRule& r);

Nfa rlg_to_nfa(const RightLinearGrammar& g);

// One variable per automaton state; rule count stays within
// |states| * |alphabet| + |accepting states|.
RightLinearGrammar dfa_to_rlg(const Dfa& d);

// Canonical minimal automaton of the generated language.
Dfa rlg_compile(const RightLinearGrammar& g, std::size_t state_cap = kDefaultStateCap);

// Picks a name not colliding with any of the given symbols: `base` itself if
// free, else underscore-prefixed.
Symbol fresh_symbol(const std::string& base, const std::vector<Symbol>& taken);

}  // namespace tcw
