#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcw/cfg.hpp"
#include "tcw/dfa.hpp"
#include "tcw/exec.hpp"

namespace tcw {

// A tree-controlled grammar: a non-erasing context-free core plus a regular
// control language over vars ∪ terminals. A terminal word belongs to the
// language iff it has a derivation tree in the core whose level words — the
// nodes at each depth read left to right — all lie in the control language,
// except the last level, which is exempt.
struct TcGrammar {
    Cfg core;
    Dfa control;  // alphabet must equal vars ∪ terminals of the core

    void validate() const;  // throws ValidationError with the first violation
};

// Every structural violation (core shape, erasing rules, control alphabet
// coverage) in a fixed order; empty means the grammar is well-formed.
std::vector<std::string> validate_tc(const TcGrammar& g);

// The canonical control alphabet: vars then terminals, declaration order.
Alphabet tc_level_alphabet(const Cfg& core);

// One cell of a derivation level. Frozen cells are terminals emitted at an
// earlier depth; the active cells, read in order, form the level word.
struct LevelCell {
    Symbol symbol;
    bool frozen = false;

    bool operator==(const LevelCell&) const = default;
    auto operator<=>(const LevelCell&) const = default;
};

// A cut through a derivation tree. The full cell sequence is the sentential
// form; the active projection is the word of the current level.
struct LevelConfig {
    std::vector<LevelCell> cells;
    std::uint32_t depth = 0;

    Word active_projection() const;  // the level word
    Word full_form() const;          // the sentential form
    bool has_active_nonterminal(const Cfg& core) const;

    bool operator==(const LevelConfig&) const = default;
};

// All successors of one parallel replacement step: every active nonterminal
// cell is rewritten by one chosen body (the Cartesian choice is complete),
// every active terminal cell freezes, and the depth increments. An active
// nonterminal without any rule stalls the branch (no successors). Throws
// ValidationError when the configuration has no active nonterminal — that is
// a final level.
std::vector<LevelConfig> tc_step(const LevelConfig& c, const Cfg& core);

// One rewrite within a level: the active cell at `position` (an index into
// the predecessor's full cell sequence) held `nonterminal` and was replaced
// by `body`.
struct TraceStep {
    std::uint32_t position = 0;
    Symbol nonterminal;
    std::vector<Symbol> body;

    bool operator==(const TraceStep&) const = default;
};

// One parallel replacement per level, covering every active nonterminal of
// the predecessor configuration in left-to-right cell order.
struct DerivationTrace {
    std::vector<std::vector<TraceStep>> levels;

    bool operator==(const DerivationTrace&) const = default;
};

struct TcStats {
    std::uint64_t configs = 0;  // distinct configurations examined
    std::uint32_t levels = 0;   // number of derivation levels reached

    bool operator==(const TcStats&) const = default;
};

struct TcEnumerateOptions {
    // Depth cap for cores with long delay cycles. The visited set already
    // guarantees termination; this knob only limits how deep trees may grow,
    // so words that need deeper trees are dropped when it is set.
    std::uint32_t max_depth = UINT32_MAX;
    Exec exec = Exec::serial;
};

struct TcEnumeration {
    std::vector<Word> words;              // sorted length-lex over the terminals
    std::vector<DerivationTrace> traces;  // traces[i] certifies words[i]
    TcStats stats;
};

// Exactly L(g) ∩ T^{≤max_len}, with a certifying trace per word. Search is a
// level-synchronous walk over configurations with a visited set keyed on the
// full cell sequence; a configuration is expanded only if its level word is
// accepted by the control, final configurations are exempt, and successors
// with more than max_len cells are pruned (sound: below the root no rule
// erases, so the frontier never shrinks).
TcEnumeration tc_enumerate(const TcGrammar& g, std::size_t max_len,
                           const TcEnumerateOptions& opts = {});

struct CertifyResult {
    bool ok = false;
    std::string diagnostic;  // empty when ok
    Word yield;              // the derived terminal word when ok

    explicit operator bool() const { return ok; }
};

// Replays the trace from [start]: every level must rewrite exactly the
// active nonterminals of its predecessor, every non-final level word must
// pass the control, frontier lengths must not shrink, and the final
// configuration must be all-terminal. Malformed traces yield a diagnostic
// instead of raising.
CertifyResult tc_certify(const TcGrammar& g, const DerivationTrace& t);

}  // namespace tcw
