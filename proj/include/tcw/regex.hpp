#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tcw/nfa.hpp"
#include "tcw/ops.hpp"

namespace tcw {

// Expression tree. Concat and Union are n-ary and flattened, so the parser
// and the printer agree on shapes. There is no epsilon node: the empty word
// is Star(Empty), which is what "%eps" parses to.
class Regex {
  public:
    enum class Kind { empty, literal, concat, alt, star };

    static Regex empty();
    static Regex literal(Symbol s);
    static Regex concat(std::vector<Regex> parts);
    static Regex alt(std::vector<Regex> parts);
    static Regex star(Regex inner);
    static Regex epsilon() { return star(empty()); }
    static Regex word(const Word& w);  // concat of literals, epsilon for the empty word

    Kind kind() const { return kind_; }
    Symbol lit() const { return lit_; }
    const std::vector<Regex>& parts() const { return parts_; }

    bool union_free() const;
    bool operator==(const Regex& o) const;

  private:
    Regex(Kind k) : kind_(k) {}
    Kind kind_;
    Symbol lit_;
    std::vector<Regex> parts_;
};

// Concrete syntax: literals are symbol names resolved against the alphabet
// by longest match, concatenation is juxtaposition or '.', '|' is union,
// '*' is star, parentheses group, %empty is the empty language, %eps the
// empty word. Whitespace separates tokens and is otherwise ignored.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

std::string print_regex(const Regex& r);

Nfa regex_to_nfa(const Regex& r, const Alphabet& alphabet);

// Canonical minimal automaton of the expression.
Dfa regex_compile(const Regex& r, const Alphabet& alphabet, std::size_t state_cap = kDefaultStateCap);
Dfa regex_compile(std::string_view text, const Alphabet& alphabet, std::size_t state_cap = kDefaultStateCap);

}  // namespace tcw
