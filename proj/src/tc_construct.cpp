#include "tcw/tc_construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tcw/errors.hpp"

namespace tcw {

namespace {

// All two-letter words u v with u from `left` and v from `right`.
void append_pairs(std::vector<Word>& out, const std::vector<Symbol>& left,
                  const std::vector<Symbol>& right) {
    for (Symbol u : left)
        for (Symbol v : right) out.push_back({u, v});
}

}  // namespace

TcConstruction kuroda_to_tc(const KurodaGrammar& g) {
    g.validate();
    TcConstruction c;

    std::vector<Symbol> taken = g.vars;
    for (Symbol t : g.terminals.symbols()) taken.push_back(t);
    auto add = [&](const std::string& base) {
        Symbol s = fresh_symbol(base, taken);
        taken.push_back(s);
        return s;
    };

    c.n_cf = g.vars;
    for (Symbol t : g.terminals.symbols()) {
        Symbol hat = add("hat_" + t.name());
        c.hat_map.emplace_back(t, hat);
        c.n_cf.push_back(hat);
    }
    auto hat_of = [&](Symbol t) {
        for (const auto& [term, hat] : c.hat_map)
            if (term == t) return hat;
        throw ValidationError("no placeholder for " + t.name());
    };

    bool erases = false;
    for (const MonotoneRule& r : g.rules) {
        if (r.lhs.size() == 2) {
            std::size_t p = c.marker_map.size() + 1;
            Symbol m1 = add("M_" + std::to_string(p) + "_1");
            Symbol m2 = add("M_" + std::to_string(p) + "_2");
            c.marker_map.emplace_back(m1, m2);
            c.n_1.push_back(m1);
            c.n_2.push_back(m2);
            c.n_12.push_back({m1, m2});
            c.p_cs.push_back({r.lhs[0], {m1}});
            c.p_cs.push_back({r.lhs[1], {m2}});
            c.p_cs.push_back({m1, {r.rhs[0]}});
            c.p_cs.push_back({m2, {r.rhs[1]}});
            continue;
        }
        if (r.rhs.empty()) {
            erases = true;
        } else if (r.rhs.size() == 1 && g.terminals.contains(r.rhs[0])) {
            c.p_t.push_back({r.lhs[0], {hat_of(r.rhs[0])}});
        } else if (r.rhs != r.lhs) {
            c.p_cf.push_back({r.lhs[0], r.rhs});
        }
        // An input chain rule A -> A is already the delay rule emitted below;
        // keeping both copies would make the groups overlap.
    }
    for (const auto& [term, hat] : c.hat_map) c.p_t.push_back({hat, {term}});
    for (Symbol v : g.vars)
        if (!(erases && v == g.start)) c.p_d.push_back({v, {v}});
    for (const auto& [term, hat] : c.hat_map) c.p_d.push_back({hat, {hat}});

    Cfg core;
    core.terminals = g.terminals;
    core.start = g.start;
    core.vars = c.n_cf;
    core.vars.insert(core.vars.end(), c.n_1.begin(), c.n_1.end());
    core.vars.insert(core.vars.end(), c.n_2.begin(), c.n_2.end());
    core.rules = c.p_cf;
    core.rules.insert(core.rules.end(), c.p_t.begin(), c.p_t.end());
    core.rules.insert(core.rules.end(), c.p_d.begin(), c.p_d.end());
    core.rules.insert(core.rules.end(), c.p_cs.begin(), c.p_cs.end());
    if (erases) core.rules.push_back({g.start, {}});

    Alphabet level = tc_level_alphabet(core);
    std::vector<Regex> letters;
    for (Symbol x : c.n_cf) letters.push_back(Regex::literal(x));
    for (const Word& w : c.n_12) letters.push_back(Regex::word(w));
    c.tc.core = std::move(core);
    c.tc.control = regex_compile(Regex::star(Regex::alt(std::move(letters))), level);
    c.tc.validate();

    std::vector<Word> prefixes;
    append_pairs(prefixes, c.n_cf, c.n_cf);
    append_pairs(prefixes, c.n_cf, c.n_1);
    prefixes.insert(prefixes.end(), c.n_12.begin(), c.n_12.end());
    std::vector<Word> interiors = prefixes;
    append_pairs(interiors, c.n_2, c.n_cf);
    append_pairs(interiors, c.n_2, c.n_1);
    std::vector<Word> suffixes;
    append_pairs(suffixes, c.n_cf, c.n_cf);
    suffixes.insert(suffixes.end(), c.n_12.begin(), c.n_12.end());
    append_pairs(suffixes, c.n_2, c.n_cf);
    std::vector<Word> shorts = {{}};
    for (Symbol x : c.n_cf) shorts.push_back({x});
    c.control_desc = make_slt(2, level, std::move(prefixes), std::move(interiors),
                              std::move(suffixes), std::move(shorts));
    return c;
}

RightLinearGrammar control_rlg_one_var(const TcConstruction& c) {
    RightLinearGrammar g;
    g.terminals = tc_level_alphabet(c.tc.core);
    Symbol s = fresh_symbol("S'", g.terminals.symbols());
    g.vars = {s};
    g.start = s;
    for (Symbol x : c.n_cf) g.rules.push_back({s, {x}, s});
    for (const Word& w : c.n_12) g.rules.push_back({s, w, s});
    for (Symbol x : c.n_cf) g.rules.push_back({s, {x}, std::nullopt});
    for (const Word& w : c.n_12) g.rules.push_back({s, w, std::nullopt});
    g.rules.push_back({s, {}, std::nullopt});
    g.validate();
    return g;
}

Regex star_of_finite_union_free(const std::vector<Word>& words, const Alphabet& alphabet) {
    for (const Word& w : words)
        for (Symbol s : w)
            if (!alphabet.contains(s))
                throw ValidationError("word symbol " + s.name() + " outside the alphabet");
    auto lex_less = [&](const Word& a, const Word& b) {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(),
            [&](Symbol x, Symbol y) { return *alphabet.index_of(x) < *alphabet.index_of(y); });
    };
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return Regex::epsilon();
    std::vector<Regex> stars;
    stars.reserve(sorted.size());
    for (const Word& w : sorted) stars.push_back(Regex::star(Regex::word(w)));
    return Regex::star(Regex::concat(std::move(stars)));
}

std::vector<Word> rl1p_semantics(const Cfg& core, const std::optional<Word>& control_word) {
    core.validate();
    if (!control_word || *control_word != Word{core.start}) return {};
    std::set<Word> words;
    for (const CfgRule& r : core.rules) {
        if (r.lhs != core.start) continue;
        if (std::all_of(r.body.begin(), r.body.end(),
                        [&](Symbol s) { return core.terminals.contains(s); }))
            words.insert(r.body);
    }
    std::vector<Word> out(words.begin(), words.end());
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return word_less(a, b, core.terminals); });
    return out;
}

}  // namespace tcw
