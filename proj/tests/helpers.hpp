#pragma once

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tcw/dfa.hpp"
#include "tcw/nfa.hpp"
#include "tcw/ops.hpp"
#include "tcw/regex.hpp"
#include "tcw/symbols.hpp"

namespace tcw::testing {

inline Alphabet alpha_a() { return Alphabet::parse("a"); }
inline Alphabet alpha_ab() { return Alphabet::parse("a b"); }
inline Alphabet alpha_abc() { return Alphabet::parse("a b c"); }

// Alphabet a1 .. an.
inline Alphabet alpha_n(unsigned n) {
    std::string names;
    for (unsigned i = 1; i <= n; ++i) names += "a" + std::to_string(i) + " ";
    return Alphabet::parse(names);
}

inline Word wd(std::initializer_list<const char*> names) { return make_word(names); }

// The fixtures directory is exported by the test harness configuration.
inline std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("TCW_FIXTURES");
    return (dir ? std::string(dir) : std::string("fixtures")) + "/" + name;
}

// Fixture languages, built from expressions here; the witness catalog builds
// them from their other sources as well.
inline Dfa lang_l1() { return regex_compile("a* b (a | b)*", alpha_ab()); }
inline Dfa lang_l2() { return regex_compile("a | (a | b) (b | c)* (a | c)", alpha_abc()); }
inline Dfa lang_l3(unsigned n) {  // the single word a1 ... a(n-1)
    Alphabet v = alpha_n(n - 1);
    Word w;
    for (unsigned i = 1; i < n; ++i) w.push_back(Symbol::intern("a" + std::to_string(i)));
    return dfa_finite(v, {w});
}
inline Dfa lang_l4(unsigned n) {  // the single word a^n
    return dfa_finite(alpha_a(), {Word(n, Symbol::intern("a"))});
}
inline Dfa lang_l5(unsigned n) { return dfa_universal(alpha_n(n)); }
inline Dfa lang_l6() { return dfa_finite(alpha_a(), {wd({"a"})}); }
inline Dfa lang_l7() { return regex_compile("a b* a | a", alpha_ab()); }
inline Dfa lang_l8() { return regex_compile("a a a (a a a)*", alpha_a()); }
inline Dfa lang_l9(unsigned n) {  // a1+ a2+ ... a(n+1)+
    Alphabet v = alpha_n(n + 1);
    std::vector<Regex> parts;
    for (unsigned i = 1; i <= n + 1; ++i) {
        Symbol s = Symbol::intern("a" + std::to_string(i));
        parts.push_back(Regex::literal(s));
        parts.push_back(Regex::star(Regex::literal(s)));
    }
    return regex_compile(Regex::concat(std::move(parts)), v);
}

// All words of length <= max_len in length-then-lex order.
inline std::vector<Word> all_words(const Alphabet& v, std::size_t max_len) {
    std::vector<Word> out{{}};
    std::vector<Word> level{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (std::size_t i = 0; i < v.size(); ++i) {
                Word e = w;
                e.push_back(v.at(i));
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

// Words of length <= max_len that occur as factors (substrings of members).
inline std::vector<Word> factors_upto(const Dfa& d, std::size_t max_len) {
    std::vector<bool> reach = reachable_states(d);
    std::vector<bool> useful = coreachable_states(d, 0);
    std::vector<Word> out;
    for (const Word& u : all_words(d.alphabet, max_len))
        for (uint32_t q = 0; q < d.state_count; ++q) {
            if (!reach[q] || !useful[d.run_from(q, u)]) continue;
            out.push_back(u);
            break;
        }
    return out;
}

inline Nfa random_nfa(std::mt19937& rng, const Alphabet& v, unsigned max_states) {
    std::uniform_int_distribution<unsigned> nstates(1, max_states);
    unsigned n = nstates(rng);
    Nfa a = nfa_blank(v);
    std::bernoulli_distribution edge(0.25), epsilon(0.08), accept(0.35), start(0.4);
    for (unsigned q = 0; q < n; ++q) a.add_state(accept(rng));
    for (unsigned q = 0; q < n; ++q) {
        for (unsigned s = 0; s < v.size(); ++s)
            for (unsigned t = 0; t < n; ++t)
                if (edge(rng)) a.add_move(q, s, t);
        for (unsigned t = 0; t < n; ++t)
            if (epsilon(rng)) a.add_eps(q, t);
    }
    for (unsigned q = 0; q < n; ++q)
        if (start(rng)) a.starts.push_back(q);
    if (a.starts.empty()) a.starts.push_back(0);
    return a;
}

// Breadth-first renumbering without any merging, for comparing automata that
// are already minimal.
inline Dfa bfs_renumber(const Dfa& d) {
    std::vector<uint32_t> order(d.state_count, UINT32_MAX);
    std::vector<uint32_t> queue{d.start};
    order[d.start] = 0;
    uint32_t assigned = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        uint32_t q = queue[head];
        for (uint32_t a = 0; a < d.alphabet.size(); ++a) {
            uint32_t t = d.step(q, a);
            if (order[t] == UINT32_MAX) {
                order[t] = assigned++;
                queue.push_back(t);
            }
        }
    }
    Dfa out;
    out.alphabet = d.alphabet;
    out.state_count = assigned;
    out.start = 0;
    out.accepting.assign(assigned, false);
    out.next.assign(static_cast<std::size_t>(assigned) * d.alphabet.size(), 0);
    for (uint32_t q = 0; q < d.state_count; ++q) {
        if (order[q] == UINT32_MAX) continue;
        out.accepting[order[q]] = d.accepting[q];
        for (uint32_t a = 0; a < d.alphabet.size(); ++a)
            out.next[static_cast<std::size_t>(order[q]) * d.alphabet.size() + a] = order[d.step(q, a)];
    }
    return out;
}

// Double-reversal minimization, used as an oracle against the refinement path.
inline Dfa brzozowski_minimal(const Nfa& n) {
    Dfa once = determinize(reverse(n));
    Dfa twice = determinize(reverse(dfa_to_nfa(once)));
    return bfs_renumber(twice);
}

inline bool same_dfa(const Dfa& a, const Dfa& b) {
    return a.alphabet == b.alphabet && a.state_count == b.state_count && a.start == b.start &&
           a.accepting == b.accepting && a.next == b.next;
}

// Hashable fingerprint of the canonical form; equal keys mean equal languages
// for automata over the same alphabet.
inline std::string dfa_key(const Dfa& d) {
    Dfa m = minimize_canonical(d);
    std::string key = std::to_string(m.state_count);
    key += '|';
    for (uint32_t q = 0; q < m.state_count; ++q) key += m.accepting[q] ? '1' : '0';
    key += '|';
    for (uint32_t t : m.next) {
        key += std::to_string(t);
        key += ',';
    }
    return key;
}

}  // namespace tcw::testing
