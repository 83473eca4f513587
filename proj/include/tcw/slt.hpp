#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcw/dfa.hpp"
#include "tcw/exec.hpp"
#include "tcw/rlg.hpp"

namespace tcw {

// A strictly locally k-testable language, given by the window width k and
// four word sets: allowed k-prefixes, allowed interior k-windows, allowed
// k-suffixes, and the accepted words shorter than k.
struct SltDescription {
    std::uint32_t k = 1;
    Alphabet alphabet;
    std::vector<Word> prefix_windows;
    std::vector<Word> interior_windows;
    std::vector<Word> suffix_windows;
    std::vector<Word> short_words;

    void normalize();       // sort length-lex and drop duplicates
    void validate() const;  // lengths, alphabet membership, no duplicates

    bool operator==(const SltDescription&) const = default;
};

SltDescription make_slt(std::uint32_t k, const Alphabet& v, std::vector<Word> prefixes,
                        std::vector<Word> interiors, std::vector<Word> suffixes,
                        std::vector<Word> shorts);

// Membership per the defining case split. A word shorter than k is accepted
// iff it is a short word; a word of length exactly k must be an allowed prefix
// and suffix at once; a longer word needs its prefix window allowed, its
// suffix window allowed, and every window starting at positions 2..|w|-k
// allowed as interior. The final window is not checked against the interior
// set.
bool slt_member(const SltDescription& desc, const Word& w);

enum class SltMethod {
    window,      // scanner DFA tracking the last window and the checks so far
    five_state,  // the fixed five-state machine; width-1 descriptions only
};

Dfa slt_to_dfa(const SltDescription& desc, SltMethod method);

// Width-1 descriptions as a grammar with exactly two variables.
RightLinearGrammar slt1_to_rlg(const SltDescription& desc);

// The least candidate description for width k: allowed prefixes/suffixes are
// the k-prefixes/k-suffixes of members of length >= k, interiors are the
// windows occurring at positions 2..|w|-k of members, shorts are the members
// shorter than k. If any description of width k matches the language, this
// one does.
SltDescription canonical_slt(const Dfa& d, std::uint32_t k, Exec exec = Exec::serial);

struct SltDecision {
    bool is_slt = false;
    std::optional<SltDescription> description;  // set when is_slt
    std::optional<Word> counterexample;         // set when not; separates the candidate from the language
};

SltDecision is_slt_k(const Dfa& d, std::uint32_t k, Exec exec = Exec::serial);

// Smallest width <= k_max that works, if any.
std::optional<std::uint32_t> is_slt_upto(const Dfa& d, std::uint32_t k_max, Exec exec = Exec::serial);

}  // namespace tcw
