#include "tcw/dfa.hpp"

#include <algorithm>

#include "tcw/errors.hpp"
#include "tcw/ops.hpp"

namespace tcw {

uint32_t Dfa::run_from(uint32_t q, const Word& w) const {
    for (Symbol s : w) {
        auto i = alphabet.index_of(s);
        if (!i) throw ValidationError("word symbol outside automaton alphabet: " + s.name());
        q = step(q, *i);
    }
    return q;
}

bool Dfa::accepts(const Word& w) const { return accepting[run_from(start, w)]; }

void Dfa::validate() const {
    if (state_count == 0) throw ValidationError("automaton needs at least one state");
    if (start >= state_count) throw ValidationError("start state out of range");
    if (accepting.size() != state_count) throw ValidationError("accepting vector size mismatch");
    if (next.size() != static_cast<std::size_t>(state_count) * alphabet.size())
        throw ValidationError("transition table size mismatch");
    for (uint32_t t : next)
        if (t >= state_count) throw ValidationError("transition target out of range");
}

Dfa dfa_empty(const Alphabet& alphabet) {
    Dfa d;
    d.alphabet = alphabet;
    d.state_count = 1;
    d.start = 0;
    d.accepting = {false};
    d.next.assign(alphabet.size(), 0);
    return d;
}

Dfa dfa_universal(const Alphabet& alphabet) {
    Dfa d = dfa_empty(alphabet);
    d.accepting = {true};
    return d;
}

Dfa dfa_finite(const Alphabet& alphabet, const std::vector<Word>& words) {
    // Trie plus sink, then canonical minimization.
    Dfa d;
    d.alphabet = alphabet;
    d.state_count = 2;  // 0 = root, 1 = sink
    d.start = 0;
    d.accepting = {false, false};
    d.next.assign(2 * alphabet.size(), 1);
    for (const Word& w : words) {
        uint32_t q = 0;
        for (Symbol s : w) {
            auto i = alphabet.index_of(s);
            if (!i) throw ValidationError("finite-language word uses unknown symbol: " + s.name());
            uint32_t t = d.step(q, *i);
            if (t == 1) {
                t = d.state_count++;
                d.accepting.push_back(false);
                d.next.resize(static_cast<std::size_t>(d.state_count) * alphabet.size(), 1);
                d.step_ref(q, *i) = t;
            }
            q = t;
        }
        d.accepting[q] = true;
    }
    return minimize_canonical(d);
}

}  // namespace tcw
