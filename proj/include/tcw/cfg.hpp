#pragma once

#include <string>
#include <vector>

#include "tcw/symbols.hpp"

namespace tcw {

// One context-free rule lhs -> body, with the body over vars ∪ terminals.
// An empty body prints as "%eps" and is only legal for the start symbol.
struct CfgRule {
    Symbol lhs;
    std::vector<Symbol> body;

    bool operator==(const CfgRule&) const = default;
};

// Non-erasing context-free grammar, the rewriting core of a tree-controlled
// grammar. No rule may erase, with one exception: start -> %eps is allowed
// provided the start symbol occurs in no rule body. That side condition is
// what keeps frontier lengths non-decreasing below the root.
struct Cfg {
    std::vector<Symbol> vars;
    Alphabet terminals;
    Symbol start;
    std::vector<CfgRule> rules;

    bool is_var(Symbol s) const;
    bool is_terminal(Symbol s) const { return terminals.contains(s); }
    std::vector<const CfgRule*> rules_for(Symbol lhs) const;

    void validate() const;  // throws ValidationError with the first violation
};

// Every structural violation in a fixed order; empty means well-formed.
std::vector<std::string> cfg_violations(const Cfg& g);

std::string print_cfg_rule(const CfgRule& r);

}  // namespace tcw
