#pragma once

#include <cstdint>
#include <optional>

#include "tcw/exec.hpp"
#include "tcw/rlg.hpp"

namespace tcw {

// Budget for exact grammar synthesis. Every component must be at least 1.
struct SearchBudget {
    uint32_t max_vars = 1;
    uint32_t max_prods = 1;
    uint32_t max_rhs_len = 1;

    bool operator==(const SearchBudget&) const = default;
};

struct SearchOptions {
    // Upper bound on explored search states (partial grammars plus the steps
    // of their derivation expansions) before the search gives up.
    uint64_t state_cap = 5'000'000;
    Exec exec = Exec::serial;
};

struct SearchResult {
    // Least grammar generating exactly the input language, under the ordering
    // (rule count, total body length, sorted body list, printed rules);
    // absent when no grammar within the budget exists.
    std::optional<RightLinearGrammar> grammar;
    // Search states explored; deterministic for serial execution.
    uint64_t states = 0;
};

// Finds a right-linear grammar with at most max_vars variables, max_prods
// rules, and bodies of at most max_rhs_len terminals that generates exactly
// L(d), or reports that none exists. The search grows partial grammars by
// the derivations of the least word still missing, prunes any partial
// grammar that overshoots the target language, and therefore only ever
// proposes rule bodies that are factors of L(d). Complete for the given
// budget: variable namings are canonicalized by first use, which covers
// every candidate grammar up to renaming. Throws ResourceError once
// opts.state_cap search states have been explored.
SearchResult search_rlg(const Dfa& d, const SearchBudget& budget, const SearchOptions& opts = {});

}  // namespace tcw
