#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tcw/cfg.hpp"
#include "tcw/monotone.hpp"
#include "tcw/regex.hpp"
#include "tcw/rlg.hpp"
#include "tcw/slt.hpp"
#include "tcw/tc.hpp"

namespace tcw {

// A tree-controlled simulation of a Kuroda-form grammar. The core keeps the
// context-free rules (P_cf), shields terminals behind hat placeholders that
// terminalize only in the last step (P_t), can delay any symbol by one level
// (P_d), and splits every context rule p: AB -> CD into marker rules
// A -> M_p_1, B -> M_p_2, M_p_1 -> C, M_p_2 -> D (P_cs). The control
// (N_cf ∪ N_12)* admits a marker only next to its mate, which is what keeps
// the two halves of a context rule applied together.
struct TcConstruction {
    TcGrammar tc;
    SltDescription control_desc;  // width-2 certificate for the control

    std::vector<Symbol> n_cf;  // input variables and the hat placeholders
    std::vector<Symbol> n_1;   // left markers M_p_1
    std::vector<Symbol> n_2;   // right markers M_p_2
    std::vector<Word> n_12;    // the matched two-letter words M_p_1 M_p_2

    std::vector<CfgRule> p_cf;  // non-terminating context-free rules, as given
    std::vector<CfgRule> p_t;   // A -> hat_a, plus hat_a -> a per terminal
    std::vector<CfgRule> p_d;   // delay rules A -> A and hat_a -> hat_a
    std::vector<CfgRule> p_cs;  // marker rules, four per context rule

    std::vector<std::pair<Symbol, Symbol>> hat_map;     // terminal a ↦ hat_a
    std::vector<std::pair<Symbol, Symbol>> marker_map;  // p ↦ (M_p_1, M_p_2), p = 1, 2, ...
};

// Builds the simulation. Rule labels p count the AB -> CD rules in grammar
// order. When the grammar erases (start -> %eps), the core keeps that rule
// and drops the useless delay start -> start, whose right-hand side would
// otherwise break the erasing side condition; the start symbol heads no
// context rule body, so nothing else mentions it.
TcConstruction kuroda_to_tc(const KurodaGrammar& g);

// One-variable grammar for the control: S' -> x S' and S' -> x for every
// x in N_cf ∪ N_12, plus S' -> %eps so the generated language matches
// (N_cf ∪ N_12)* exactly. The empty level word never occurs in a derivation,
// so the λ-rule does not change which derivations the control admits.
RightLinearGrammar control_rlg_one_var(const TcConstruction& c);

// (w1* w2* ... wn*)*: a union-free expression with the language (words)*.
// Words are deduplicated and taken in lexicographic alphabet order; the
// empty set yields %empty*, the expression for {%eps}.
Regex star_of_finite_union_free(const std::vector<Word>& words, const Alphabet& alphabet);

// What a single-production right-linear control admits: if the control is
// exactly {start}, the language collapses to the terminal right sides of the
// start symbol; any other single word (or no word at all) blocks the
// derivation at the root level.
std::vector<Word> rl1p_semantics(const Cfg& core, const std::optional<Word>& control_word);

}  // namespace tcw
