#pragma once

#include <cstdint>
#include <vector>

#include "tcw/dfa.hpp"
#include "tcw/symbols.hpp"

namespace tcw {

// Nondeterministic automaton with spontaneous (%eps) moves and a set of
// start states.
struct Nfa {
    Alphabet alphabet;
    uint32_t state_count = 0;
    std::vector<uint32_t> starts;
    std::vector<bool> accepting;
    // moves[state][symbol index] -> successor states
    std::vector<std::vector<std::vector<uint32_t>>> moves;
    // eps[state] -> successor states
    std::vector<std::vector<uint32_t>> eps;

    uint32_t add_state(bool accept = false);
    void add_move(uint32_t from, uint32_t sym_index, uint32_t to);
    void add_eps(uint32_t from, uint32_t to);

    void validate() const;
};

Nfa nfa_blank(const Alphabet& alphabet);

// Reverses every transition and swaps start and accepting sets.
Nfa reverse(const Nfa& n);
Nfa dfa_to_nfa(const Dfa& d);

}  // namespace tcw
