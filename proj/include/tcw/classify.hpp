#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcw/dfa.hpp"
#include "tcw/rlg.hpp"
#include "tcw/rlg_search.hpp"
#include "tcw/slt.hpp"

namespace tcw {

struct ClassifyBounds {
    // Largest window size tried for strict local testability.
    uint32_t k_max = 4;
    // Largest parameter tried for definite languages.
    uint32_t definite_k_max = 8;
    // Largest number of alphabet stars tried for union representations.
    uint32_t mon_n_max = 3;
    // When set, runs the exact grammar search and attaches its outcome.
    std::optional<SearchBudget> search_budget;
};

struct SearchCertificate {
    SearchBudget budget;
    std::optional<RightLinearGrammar> grammar;  // absent: none within budget
    uint64_t states = 0;
};

// Family verdicts with machine-checkable evidence. Verdicts with a bound
// (mon_n, definite_k, slt_k) are relative to the echoed bounds and report
// the least parameter that works, or nothing if none up to the bound does.
struct ClassificationReport {
    Alphabet alphabet;
    uint32_t k_max = 0;
    uint32_t definite_k_max = 0;
    uint32_t mon_n_max = 0;

    uint32_t state_complexity = 0;

    bool finite = false;
    std::vector<Word> members;  // the language itself when finite

    bool nilpotent = false;
    std::vector<Word> co_members;  // complement members when co-finite only

    bool monoidal = false;  // L = V* for the explicit alphabet V

    std::optional<uint32_t> mon_n;               // least union size A_1*∪…∪A_n*
    std::vector<std::vector<Symbol>> mon_parts;  // the sub-alphabets A_i

    bool combinational = false;
    std::vector<Symbol> comb_letters;  // X with L = V*X

    std::optional<uint32_t> definite_k;
    std::vector<Word> definite_words;     // A with L = A ∪ V*B, A ⊂ V^{<k}
    std::vector<Word> definite_suffixes;  // B ⊂ V^k

    bool suffix_closed = false;

    std::optional<uint32_t> slt_k;
    std::optional<SltDescription> slt_description;

    // Grammar-size bounds witnessed by bound_grammar (variables per useful
    // automaton state), so Var_RL and Prod_RL never exceed them.
    uint32_t var_rl_upper = 0;
    uint32_t prod_rl_upper = 0;
    RightLinearGrammar bound_grammar;

    std::optional<SearchCertificate> search;
};

// Decides every family exactly (finite, nilpotent, monoidal, combinational,
// suffix-closed) or up to the stated bound (MON_n, definite, SLT_k), and
// computes the measures State, Var_RL, Prod_RL (the latter two as witnessed
// upper bounds). Verdicts are relative to d's explicit alphabet.
ClassificationReport classify(const Dfa& d, const ClassifyBounds& bounds = {});

}  // namespace tcw
