#include "tcw/rlg.hpp"

#include <algorithm>
#include <unordered_set>

#include "tcw/errors.hpp"

namespace tcw {

void RightLinearGrammar::validate() const {
    std::unordered_set<uint32_t> var_ids;
    for (Symbol v : vars) {
        if (!var_ids.insert(v.id()).second) throw ValidationError("duplicate variable " + v.name());
        if (terminals.contains(v))
            throw ValidationError("variable also used as terminal: " + v.name());
    }
    if (!var_ids.count(start.id())) throw ValidationError("start symbol is not a variable");
    for (const RlgRule& r : rules) {
        if (!var_ids.count(r.lhs.id())) throw ValidationError("rule lhs is not a variable: " + r.lhs.name());
        for (Symbol s : r.body)
            if (!terminals.contains(s))
                throw ValidationError("rule body symbol is not a terminal: " + s.name());
        if (r.next && !var_ids.count(r.next->id()))
            throw ValidationError("rule continuation is not a variable: " + r.next->name());
    }
}

std::string print_rlg_rule(const RlgRule& r) {
    std::string out = r.lhs.name() + " ->";
    if (r.body.empty() && !r.next) {
        out += " %eps";
        return out;
    }
    for (Symbol s : r.body) out += " " + s.name();
    if (r.next) out += " " + r.next->name();
    return out;
}

Nfa rlg_to_nfa(const RightLinearGrammar& g) {
    g.validate();
    Nfa n = nfa_blank(g.terminals);
    std::unordered_map<uint32_t, uint32_t> var_state;
    for (Symbol v : g.vars) var_state[v.id()] = n.add_state(false);
    uint32_t accept = n.add_state(true);
    n.starts = {var_state[g.start.id()]};
    for (const RlgRule& r : g.rules) {
        uint32_t from = var_state[r.lhs.id()];
        uint32_t to = r.next ? var_state[r.next->id()] : accept;
        if (r.body.empty()) {
            n.add_eps(from, to);
            continue;
        }
        uint32_t q = from;
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            uint32_t target = (i + 1 == r.body.size()) ? to : n.add_state(false);
            n.add_move(q, *g.terminals.index_of(r.body[i]), target);
            q = target;
        }
    }
    return n;
}

RightLinearGrammar dfa_to_rlg(const Dfa& d) {
    d.validate();
    std::vector<bool> useful = coreachable_states(d, 0);
    RightLinearGrammar g;
    g.terminals = d.alphabet;
    std::vector<Symbol> taken = d.alphabet.symbols();
    std::vector<Symbol> names(d.state_count);
    for (uint32_t q = 0; q < d.state_count; ++q) {
        names[q] = fresh_symbol("Q" + std::to_string(q), taken);
        g.vars.push_back(names[q]);
    }
    g.start = names[d.start];
    for (uint32_t q = 0; q < d.state_count; ++q) {
        for (uint32_t a = 0; a < d.alphabet.size(); ++a) {
            uint32_t t = d.step(q, a);
            if (!useful[t]) continue;
            g.rules.push_back({names[q], {d.alphabet.at(a)}, names[t]});
        }
        if (d.accepting[q]) g.rules.push_back({names[q], {}, std::nullopt});
    }
    return g;
}

Dfa rlg_compile(const RightLinearGrammar& g, std::size_t state_cap) {
    return determinize_minimize(rlg_to_nfa(g), state_cap);
}

Symbol fresh_symbol(const std::string& base, const std::vector<Symbol>& taken) {
    std::string name = base;
    for (;;) {
        Symbol s = Symbol::intern(name);
        if (std::find(taken.begin(), taken.end(), s) == taken.end()) return s;
        name = "_" + name;
    }
}

}  // namespace tcw
