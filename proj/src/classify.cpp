#include "tcw/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tcw/errors.hpp"
#include "tcw/ops.hpp"

namespace tcw {

namespace {

// A* over the full alphabet, for the sub-alphabet selected by `mask`.
Dfa star_of_letters(const Alphabet& v, uint32_t mask) {
    Dfa d;
    d.alphabet = v;
    d.state_count = 2;
    d.start = 0;
    d.accepting = {true, false};
    d.next.assign(2 * v.size(), 1);
    for (uint32_t a = 0; a < v.size(); ++a)
        if ((mask >> a) & 1u) d.next[a] = 0;
    return d;
}

// V*X: accept exactly when the last letter lies in X.
Dfa ends_in_letters(const Alphabet& v, const std::vector<bool>& in_x) {
    Dfa d;
    d.alphabet = v;
    d.state_count = 2;
    d.start = 0;
    d.accepting = {false, true};
    d.next.assign(2 * v.size(), 0);
    for (uint32_t q = 0; q < 2; ++q)
        for (uint32_t a = 0; a < v.size(); ++a)
            if (in_x[a]) d.next[q * v.size() + a] = 1;
    return d;
}

// Least n ≤ bound such that L = A_1* ∪ … ∪ A_n* for nonempty sub-alphabets.
// Only maximal candidates matter: replacing any part by a maximal candidate
// containing it keeps the union inside L without losing words.
void decide_mon(const Dfa& m, uint32_t bound, std::optional<uint32_t>& mon_n,
                std::vector<std::vector<Symbol>>& parts) {
    const uint32_t k = static_cast<uint32_t>(m.alphabet.size());
    if (k > 16)
        throw ResourceError("classify: union-of-stars search handles at most 16 letters");
    std::vector<uint32_t> stars;
    for (uint32_t mask = 1; mask < (1u << k); ++mask)
        if (subset_language(star_of_letters(m.alphabet, mask), m)) stars.push_back(mask);
    std::vector<uint32_t> maximal;
    for (uint32_t mask : stars) {
        bool covered = false;
        for (uint32_t other : stars)
            if (other != mask && (other & mask) == mask) {
                covered = true;
                break;
            }
        if (!covered) maximal.push_back(mask);
    }

    std::vector<uint32_t> pick;
    auto matches = [&]() {
        Dfa acc = dfa_empty(m.alphabet);
        for (uint32_t mask : pick)
            acc = combine(acc, star_of_letters(m.alphabet, mask), SetOp::set_union);
        return equivalent(acc, m).equal;
    };
    auto choose = [&](auto&& self, std::size_t from, uint32_t left) -> bool {
        if (left == 0) return matches();
        for (std::size_t i = from; i < maximal.size(); ++i) {
            pick.push_back(maximal[i]);
            if (self(self, i + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (uint32_t n = 1; n <= bound && n <= maximal.size(); ++n) {
        pick.clear();
        if (!choose(choose, 0, n)) continue;
        mon_n = n;
        for (uint32_t mask : pick) {
            std::vector<Symbol> part;
            for (uint32_t a = 0; a < k; ++a)
                if ((mask >> a) & 1u) part.push_back(m.alphabet.at(a));
            parts.push_back(std::move(part));
        }
        return;
    }
}

// Least k ≤ bound such that membership of any word of length ≥ k depends
// only on its last k letters: no pair of states may be distinguishable by a
// word of length exactly k. bad_0 marks pairs with differing acceptance;
// bad_{j+1}(p,q) = ∃a bad_j(δ(p,a), δ(q,a)). All states of the minimal
// automaton are reachable, so every pair counts.
std::optional<uint32_t> decide_definite(const Dfa& m, uint32_t bound) {
    const uint32_t n = m.state_count;
    std::vector<bool> bad(static_cast<std::size_t>(n) * n);
    for (uint32_t p = 0; p < n; ++p)
        for (uint32_t q = 0; q < n; ++q) bad[p * n + q] = m.accepting[p] != m.accepting[q];
    for (uint32_t k = 0; k <= bound; ++k) {
        if (std::find(bad.begin(), bad.end(), true) == bad.end()) return k;
        std::vector<bool> next(static_cast<std::size_t>(n) * n, false);
        for (uint32_t p = 0; p < n; ++p)
            for (uint32_t q = 0; q < n; ++q) {
                for (uint32_t a = 0; a < m.alphabet.size(); ++a)
                    if (bad[m.step(p, a) * n + m.step(q, a)]) {
                        next[p * n + q] = true;
                        break;
                    }
            }
        bad = std::move(next);
    }
    return std::nullopt;
}

// All words of length exactly k that end some member of L(m).
std::vector<Word> member_suffixes(const Dfa& m, uint32_t k) {
    double volume = 1;
    for (uint32_t i = 0; i < k; ++i) volume *= static_cast<double>(m.alphabet.size());
    if (volume > 2'000'000)
        throw ResourceError("classify: definite certificate too large to enumerate");
    std::vector<Word> out;
    std::vector<uint32_t> digits(k, 0);
    for (;;) {
        Word w;
        for (uint32_t idx : digits) w.push_back(m.alphabet.at(idx));
        for (uint32_t q = 0; q < m.state_count; ++q)
            if (m.accepting[m.run_from(q, w)]) {
                out.push_back(w);
                break;
            }
        std::size_t i = k;
        while (i > 0 && digits[i - 1] + 1 == m.alphabet.size()) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
    }
    return out;
}

// Grammar witnessing the Var_RL and Prod_RL upper bounds: the state grammar
// of the minimal automaton with variables for useful states only.
RightLinearGrammar bound_grammar_of(const Dfa& m) {
    RightLinearGrammar g = dfa_to_rlg(m);
    std::set<Symbol> used{g.start};
    for (const RlgRule& r : g.rules) {
        used.insert(r.lhs);
        if (r.next) used.insert(*r.next);
    }
    std::vector<Symbol> kept;
    for (Symbol v : g.vars)
        if (used.count(v)) kept.push_back(v);
    g.vars = std::move(kept);
    g.validate();
    return g;
}

}  // namespace

ClassificationReport classify(const Dfa& d, const ClassifyBounds& bounds) {
    if (bounds.k_max < 1) throw ValidationError("classify: k_max must be at least 1");
    if (bounds.mon_n_max < 1) throw ValidationError("classify: mon_n_max must be at least 1");
    d.validate();
    Dfa m = minimize_canonical(d);

    ClassificationReport r;
    r.alphabet = m.alphabet;
    r.k_max = bounds.k_max;
    r.definite_k_max = bounds.definite_k_max;
    r.mon_n_max = bounds.mon_n_max;
    r.state_complexity = m.state_count;

    r.finite = finite_language(m, &r.members);
    r.nilpotent = r.finite || finite_language(complement(m), &r.co_members);
    if (r.finite) r.co_members.clear();

    r.monoidal = equivalent(m, dfa_universal(m.alphabet)).equal;
    decide_mon(m, bounds.mon_n_max, r.mon_n, r.mon_parts);

    std::vector<bool> in_x(m.alphabet.size(), false);
    for (uint32_t a = 0; a < m.alphabet.size(); ++a)
        in_x[a] = m.accepts(Word{m.alphabet.at(a)});
    r.combinational = equivalent(m, ends_in_letters(m.alphabet, in_x)).equal;
    if (r.combinational)
        for (uint32_t a = 0; a < m.alphabet.size(); ++a)
            if (in_x[a]) r.comb_letters.push_back(m.alphabet.at(a));

    r.definite_k = decide_definite(m, bounds.definite_k_max);
    if (r.definite_k) {
        if (*r.definite_k > 0) r.definite_words = enumerate_dfa(m, *r.definite_k - 1);
        r.definite_suffixes = member_suffixes(m, *r.definite_k);
    }

    r.suffix_closed = is_suffix_closed(m);

    r.slt_k = is_slt_upto(m, bounds.k_max);
    if (r.slt_k) r.slt_description = is_slt_k(m, *r.slt_k).description;

    r.bound_grammar = bound_grammar_of(m);
    r.var_rl_upper = static_cast<uint32_t>(r.bound_grammar.vars.size());
    r.prod_rl_upper = static_cast<uint32_t>(r.bound_grammar.rules.size());

    if (bounds.search_budget) {
        SearchResult sr = search_rlg(m, *bounds.search_budget);
        r.search = SearchCertificate{*bounds.search_budget, std::move(sr.grammar), sr.states};
    }
    return r;
}

}  // namespace tcw
