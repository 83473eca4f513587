#pragma once

#include <string>
#include <vector>

#include "tcw/symbols.hpp"

namespace tcw {

// One rewriting rule lhs -> rhs over vars ∪ terminals. In a monotone grammar
// the left side holds at least one variable and the right side is at least as
// long, with the single exception start -> %eps, allowed when the start
// symbol occurs in no right-hand side.
struct MonotoneRule {
    Word lhs;
    Word rhs;

    bool operator==(const MonotoneRule&) const = default;
};

struct MonotoneGrammar {
    std::vector<Symbol> vars;
    Alphabet terminals;
    Symbol start;
    std::vector<MonotoneRule> rules;

    void validate() const;  // throws ValidationError with the first violation
};

// Every structural violation in a fixed order; empty means well-formed.
std::vector<std::string> monotone_violations(const MonotoneGrammar& g);

std::string print_monotone_rule(const MonotoneRule& r);

// Exactly L(g) ∩ T^{≤max_len}, by rewriting sentential forms breadth-first
// with a visited set. Forms longer than max_len are pruned, which is sound
// because no rule shrinks (start -> %eps only ever rewrites the axiom).
std::vector<Word> enumerate_monotone(const MonotoneGrammar& g, std::size_t max_len);

// Kuroda normal form: every rule is AB -> CD, A -> BC, A -> B, or A -> a
// over the variables, plus optionally start -> %eps under the usual side
// condition.
struct KurodaGrammar {
    std::vector<Symbol> vars;
    Alphabet terminals;
    Symbol start;
    std::vector<MonotoneRule> rules;

    void validate() const;
};

std::vector<std::string> kuroda_violations(const KurodaGrammar& g);

// The same rules read as a monotone grammar; every Kuroda shape qualifies.
MonotoneGrammar kuroda_as_monotone(const KurodaGrammar& g);

// Classical three-phase normalization: terminal separation (X_a variables
// shield terminals), body splitting (Y chains break long right sides),
// context chaining (Z pairs reduce long context rules to AB -> CD). The
// generated language is unchanged at every phase.
KurodaGrammar monotone_to_kuroda(const MonotoneGrammar& g);

}  // namespace tcw
