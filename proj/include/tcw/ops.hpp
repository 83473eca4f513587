#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcw/dfa.hpp"
#include "tcw/nfa.hpp"

namespace tcw {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// Minimal automaton with states renumbered by breadth-first discovery from
// the start state, following alphabet order. Equal languages over equal
// alphabets give bit-identical results, so minimal forms can be compared
// directly.
Dfa minimize_canonical(const Dfa& d);

// Subset construction; the result is complete but not minimized. Throws
// ResourceError once more than `state_cap` subset states appear.
Dfa determinize(const Nfa& n, std::size_t state_cap = kDefaultStateCap);

Dfa determinize_minimize(const Nfa& n, std::size_t state_cap = kDefaultStateCap);

enum class SetOp { set_union, set_intersection, set_difference };

// Product construction followed by canonical minimization. Alphabets must match.
Dfa combine(const Dfa& a, const Dfa& b, SetOp op);
Dfa complement(const Dfa& d);

struct EquivResult {
    bool equal = false;
    // Lexicographically least among the shortest words in the symmetric
    // difference; absent when equal.
    std::optional<Word> witness;
};

EquivResult equivalent(const Dfa& a, const Dfa& b);

// True iff L(a) is contained in L(b). Alphabets must match.
bool subset_language(const Dfa& a, const Dfa& b);

bool is_empty_language(const Dfa& d);
// Least word of the language in length-then-lex order, if any.
std::optional<Word> shortest_word(const Dfa& d);

// All accepted words of length <= max_len in length-then-lex order.
std::vector<Word> enumerate_dfa(const Dfa& d, std::size_t max_len);

// Number of states of the minimal complete automaton (sink included).
std::size_t state_complexity(const Dfa& d);

// {y : x y in L for some x}, and the test for L being closed under suffixes.
Dfa suffix_language(const Dfa& d);
bool is_suffix_closed(const Dfa& d);

// True iff the language is finite; fills `words` with the members when so.
bool finite_language(const Dfa& d, std::vector<Word>* words = nullptr);

// Per-state reachability from the start, and reachability of acceptance
// (min_steps 0 or 1 selects whether paths of length zero count).
std::vector<bool> reachable_states(const Dfa& d);
std::vector<bool> coreachable_states(const Dfa& d, int min_steps = 0);

}  // namespace tcw
