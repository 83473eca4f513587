#include "tcw/nfa.hpp"

#include "tcw/errors.hpp"

namespace tcw {

uint32_t Nfa::add_state(bool accept) {
    uint32_t q = state_count++;
    accepting.push_back(accept);
    moves.emplace_back(alphabet.size());
    eps.emplace_back();
    return q;
}

void Nfa::add_move(uint32_t from, uint32_t sym_index, uint32_t to) {
    moves[from][sym_index].push_back(to);
}

void Nfa::add_eps(uint32_t from, uint32_t to) { eps[from].push_back(to); }

void Nfa::validate() const {
    if (accepting.size() != state_count || moves.size() != state_count || eps.size() != state_count)
        throw ValidationError("nfa vector size mismatch");
    for (uint32_t s : starts)
        if (s >= state_count) throw ValidationError("nfa start state out of range");
    for (const auto& row : moves) {
        if (row.size() != alphabet.size()) throw ValidationError("nfa row size mismatch");
        for (const auto& targets : row)
            for (uint32_t t : targets)
                if (t >= state_count) throw ValidationError("nfa transition target out of range");
    }
    for (const auto& targets : eps)
        for (uint32_t t : targets)
            if (t >= state_count) throw ValidationError("nfa eps target out of range");
}

Nfa nfa_blank(const Alphabet& alphabet) {
    Nfa n;
    n.alphabet = alphabet;
    return n;
}

Nfa reverse(const Nfa& n) {
    Nfa r = nfa_blank(n.alphabet);
    for (uint32_t q = 0; q < n.state_count; ++q) r.add_state(false);
    for (uint32_t q = 0; q < n.state_count; ++q) {
        for (uint32_t a = 0; a < n.alphabet.size(); ++a)
            for (uint32_t t : n.moves[q][a]) r.add_move(t, a, q);
        for (uint32_t t : n.eps[q]) r.add_eps(t, q);
        if (n.accepting[q]) r.starts.push_back(q);
    }
    for (uint32_t s : n.starts) r.accepting[s] = true;
    return r;
}

Nfa dfa_to_nfa(const Dfa& d) {
    Nfa n = nfa_blank(d.alphabet);
    for (uint32_t q = 0; q < d.state_count; ++q) n.add_state(d.accepting[q]);
    for (uint32_t q = 0; q < d.state_count; ++q)
        for (uint32_t a = 0; a < d.alphabet.size(); ++a) n.add_move(q, a, d.step(q, a));
    n.starts = {d.start};
    return n;
}

}  // namespace tcw
