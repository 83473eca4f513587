#pragma once

#include <cstdint>
#include <vector>

#include "tcw/symbols.hpp"

namespace tcw {

// Deterministic complete automaton. The transition table always has an entry
// for every (state, symbol) pair, so a non-accepting sink is an ordinary
// state and is counted like any other.
struct Dfa {
    Alphabet alphabet;
    uint32_t state_count = 0;
    uint32_t start = 0;
    std::vector<bool> accepting;     // state_count entries
    std::vector<uint32_t> next;      // state_count * alphabet.size(), row-major

    uint32_t step(uint32_t q, uint32_t sym_index) const {
        return next[static_cast<std::size_t>(q) * alphabet.size() + sym_index];
    }
    uint32_t& step_ref(uint32_t q, uint32_t sym_index) {
        return next[static_cast<std::size_t>(q) * alphabet.size() + sym_index];
    }

    // Runs the word from q; throws ValidationError on symbols outside the alphabet.
    uint32_t run_from(uint32_t q, const Word& w) const;
    bool accepts(const Word& w) const;

    void validate() const;
};

// The single-state automaton of the empty language over `alphabet`.
Dfa dfa_empty(const Alphabet& alphabet);
// The single-state automaton of the full language alphabet*.
Dfa dfa_universal(const Alphabet& alphabet);
// Minimal automaton of a finite set of words.
Dfa dfa_finite(const Alphabet& alphabet, const std::vector<Word>& words);

}  // namespace tcw
