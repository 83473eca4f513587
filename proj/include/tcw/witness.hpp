#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcw/dfa.hpp"
#include "tcw/exec.hpp"
#include "tcw/rlg_search.hpp"
#include "tcw/slt.hpp"

namespace tcw {

// How one membership claim is decided. State counts and width-k decisions
// are exact; a grammar search is exact when it finds a grammar and a bounded
// refutation when it does not, so negative search claims only ever say
// "no grammar within the budget".
enum class ClaimMethod {
    state_complexity,  // compare the minimal automaton against the state bound
    slt_certificate,   // is_slt_k must produce a width-k description
    slt_refutation,    // is_slt_k must refuse every width from 1 to the bound
    grammar_search,    // search_rlg within the stated budget
};

// One assertion "the language is (not) a member of `family`", paired with
// the procedure that checks it. `bound` is the family parameter: n for
// REG_n^Z, k for SLT_k, the width ceiling for the whole class SLT. Searches
// carry their budget instead.
struct WitnessClaim {
    std::string family;
    bool member = true;
    ClaimMethod method = ClaimMethod::state_complexity;
    std::uint32_t bound = 0;
    std::optional<SearchBudget> budget;
};

// One way the language is defined. Every source of a case compiles to the
// same canonical automaton; `text` is its printed form for reports.
struct WitnessSource {
    std::string kind;  // "regex", "slt", or "grammar"
    std::string text;
    Dfa dfa;
};

struct WitnessCase {
    std::string id;  // "l-l1" .. "l-l9"
    std::optional<std::uint32_t> n;
    std::string language;  // set-builder rendering, e.g. "{a}* {b} {a, b}*"
    Dfa canonical;
    std::vector<WitnessSource> sources;
    std::vector<WitnessClaim> claims;
    // The width-k windows the case quotes, when one of its sources is an SLT
    // description; certificate claims must reproduce them exactly.
    std::optional<SltDescription> stated_slt;
};

// Verdict for one claim with a one-line, deterministic evidence string.
struct ClaimVerdict {
    WitnessClaim claim;
    bool verified = false;
    std::string evidence;
};

struct WitnessReport {
    WitnessCase subject;
    bool sources_agree = false;  // all sources equivalent to the canonical automaton
    std::vector<ClaimVerdict> verdicts;
    bool green = false;  // sources agree and every claim verified
};

// Instantiates one catalog language together with its two claims:
//
//   l-l1        {a}* {b} {a, b}*                REG_2^Z yes   SLT no (k <= 4)
//   l-l2        width-1 windows B {a, b},       SLT_1 yes     REG_4^Z no
//               I {b, c}, E {a, c}, F {}
//   l-l3 (n)    the single word a1 ... a(n-1)   SLT_2 yes     REG_n^Z no    2 <= n <= 6
//   l-l4 (n)    the single word a^n             RL_1^P yes    SLT_n no      1 <= n <= 6
//   l-l5 (n)    {a1, ..., an}*                  SLT_1 yes     RL_n^P no     1 <= n <= 6
//   l-l6        {a}                             RL_1^V yes    SLT_1 no
//   l-l7        {a} {b}* {a} | {a}              SLT_1 yes     RL_1^V no
//   l-l8        {a^(3m) : m >= 1}               RL_1^V yes    SLT no (k <= 4)
//   l-l9 (n)    {a1}+ {a2}+ ... {a(n+1)}+       SLT_2 yes     RL_n^V no     1 <= n <= 4
//
// Throws ValidationError for an unknown id, a missing or surplus parameter,
// or a parameter outside the supported range.
WitnessCase build_witness(const std::string& id, std::optional<std::uint32_t> n = std::nullopt);

// The supported parameter range of an id; nullopt for the fixed cases.
// Throws ValidationError for an unknown id.
std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_range(const std::string& id);

// The default sweep, in catalog order: l-l1, l-l2, l-l3 for n = 2..6,
// l-l4 for n = 1..4, l-l5 for n = 1..4, l-l6, l-l7, l-l8, l-l9 for n = 1..4.
std::vector<WitnessCase> default_witness_cases();

// Runs every claim and checks that all sources agree with the canonical
// automaton. Failed checks become report entries, never exceptions.
WitnessReport verify_witness(const WitnessCase& subject, Exec exec = Exec::serial);

// "l-l3" or "l-l3 n=4": the display name of a case instance.
std::string witness_instance_name(const WitnessCase& subject);

std::string witness_report_text(const WitnessReport& report);

}  // namespace tcw
