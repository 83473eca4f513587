#include "tcw/slt.hpp"

#include <algorithm>
#include <map>

#include "tcw/errors.hpp"
#include "tcw/ops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcw {

namespace {

void sort_words(std::vector<Word>& words, const Alphabet& v) {
    std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return word_less(a, b, v); });
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool has_word(const std::vector<Word>& words, const Word& w) {
    return std::find(words.begin(), words.end(), w) != words.end();
}

void check_set(const std::vector<Word>& words, const Alphabet& v, bool exact_k, std::uint32_t k,
               const char* which) {
    for (const Word& w : words) {
        if (exact_k ? w.size() != k : w.size() >= k)
            throw ValidationError(std::string(which) + " word '" + word_str(w) + "' has the wrong length");
        for (Symbol s : w)
            if (!v.contains(s))
                throw ValidationError(std::string(which) + " word '" + word_str(w) + "' leaves the alphabet");
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (words[i] == words[j])
                throw ValidationError(std::string(which) + " repeats the word '" + word_str(words[i]) + "'");
}

Word window_at(const Word& w, std::size_t start, std::uint32_t k) {
    return Word(w.begin() + start, w.begin() + start + k);
}

}  // namespace

void SltDescription::normalize() {
    sort_words(prefix_windows, alphabet);
    sort_words(interior_windows, alphabet);
    sort_words(suffix_windows, alphabet);
    sort_words(short_words, alphabet);
}

void SltDescription::validate() const {
    if (k == 0) throw ValidationError("window width must be at least 1");
    check_set(prefix_windows, alphabet, true, k, "prefix set");
    check_set(interior_windows, alphabet, true, k, "interior set");
    check_set(suffix_windows, alphabet, true, k, "suffix set");
    check_set(short_words, alphabet, false, k, "short-word set");
}

SltDescription make_slt(std::uint32_t k, const Alphabet& v, std::vector<Word> prefixes,
                        std::vector<Word> interiors, std::vector<Word> suffixes,
                        std::vector<Word> shorts) {
    SltDescription d;
    d.k = k;
    d.alphabet = v;
    d.prefix_windows = std::move(prefixes);
    d.interior_windows = std::move(interiors);
    d.suffix_windows = std::move(suffixes);
    d.short_words = std::move(shorts);
    d.normalize();
    d.validate();
    return d;
}

bool slt_member(const SltDescription& desc, const Word& w) {
    for (Symbol s : w)
        if (!desc.alphabet.contains(s))
            throw ValidationError("word symbol '" + s.name() + "' is not in the description's alphabet");
    const std::uint32_t k = desc.k;
    if (w.size() < k) return has_word(desc.short_words, w);
    if (w.size() == k) return has_word(desc.prefix_windows, w) && has_word(desc.suffix_windows, w);
    if (!has_word(desc.prefix_windows, window_at(w, 0, k))) return false;
    if (!has_word(desc.suffix_windows, window_at(w, w.size() - k, k))) return false;
    // positions 2..|w|-k, 1-based
    for (std::size_t j = 1; j + k < w.size(); ++j)
        if (!has_word(desc.interior_windows, window_at(w, j, k))) return false;
    return true;
}

namespace {

// Scanner states. Below width: the word read so far. At and beyond width:
// the current window plus three bits (first window still current, prefix
// check passed, interior checks passed so far).
struct ScanKey {
    bool long_phase = false;
    Word tail;
    bool first_current = false;
    bool prefix_ok = false;
    bool interior_ok = false;

    bool operator<(const ScanKey& o) const {
        return std::tie(long_phase, tail, first_current, prefix_ok, interior_ok) <
               std::tie(o.long_phase, o.tail, o.first_current, o.prefix_ok, o.interior_ok);
    }
};

Dfa slt_window_dfa(const SltDescription& desc) {
    const Alphabet& v = desc.alphabet;
    const std::uint32_t k = desc.k;
    std::map<ScanKey, std::uint32_t> ids;
    std::vector<ScanKey> order;
    auto intern = [&](const ScanKey& key) {
        auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(order.size()));
        if (fresh) order.push_back(key);
        return it->second;
    };
    intern(ScanKey{});  // the empty word
    std::vector<std::uint32_t> next;
    for (std::uint32_t q = 0; q < order.size(); ++q) {
        ScanKey cur = order[q];  // copy: interning below may reallocate
        for (std::uint32_t a = 0; a < v.size(); ++a) {
            ScanKey to;
            to.long_phase = true;
            if (!cur.long_phase) {
                Word w = cur.tail;
                w.push_back(v.at(a));
                if (w.size() < k) {
                    to = ScanKey{false, std::move(w), false, false, false};
                } else {
                    to.first_current = true;
                    to.prefix_ok = has_word(desc.prefix_windows, w);
                    to.interior_ok = true;
                    to.tail = std::move(w);
                }
            } else {
                to.prefix_ok = cur.prefix_ok;
                to.interior_ok =
                    cur.interior_ok && (cur.first_current || has_word(desc.interior_windows, cur.tail));
                to.tail = Word(cur.tail.begin() + 1, cur.tail.end());
                to.tail.push_back(v.at(a));
                to.first_current = false;
            }
            std::uint32_t t = intern(to);
            next.push_back(t);
        }
    }
    Dfa d;
    d.alphabet = v;
    d.state_count = static_cast<std::uint32_t>(order.size());
    d.start = 0;
    d.next = std::move(next);
    d.accepting.assign(d.state_count, false);
    for (std::uint32_t q = 0; q < d.state_count; ++q) {
        const ScanKey& key = order[q];
        if (!key.long_phase)
            d.accepting[q] = has_word(desc.short_words, key.tail);
        else
            d.accepting[q] = key.prefix_ok && key.interior_ok && has_word(desc.suffix_windows, key.tail);
    }
    d.validate();
    return d;
}

Dfa slt_five_state_dfa(const SltDescription& desc) {
    if (desc.k != 1) throw ValidationError("the five-state construction needs window width 1");
    const Alphabet& v = desc.alphabet;
    auto in_b = [&](Symbol s) { return has_word(desc.prefix_windows, Word{s}); };
    auto in_i = [&](Symbol s) { return has_word(desc.interior_windows, Word{s}); };
    auto in_e = [&](Symbol s) { return has_word(desc.suffix_windows, Word{s}); };
    Dfa d;
    d.alphabet = v;
    d.state_count = 5;
    d.start = 0;
    d.accepting = {has_word(desc.short_words, Word{}), true, true, false, false};
    d.next.assign(std::size_t(5) * v.size(), 4);
    for (std::uint32_t a = 0; a < v.size(); ++a) {
        Symbol s = v.at(a);
        std::uint32_t from_start = !in_b(s) ? 4 : in_e(s) ? 1 : 3;
        d.next[0 * v.size() + a] = from_start;
        std::uint32_t going = in_e(s) ? (in_i(s) ? 1 : 2) : (in_i(s) ? 3 : 4);
        d.next[1 * v.size() + a] = going;
        d.next[3 * v.size() + a] = going;
        // states 2 and 4 fall through to the trap on every symbol
    }
    d.validate();
    return d;
}

}  // namespace

Dfa slt_to_dfa(const SltDescription& desc, SltMethod method) {
    desc.validate();
    if (method == SltMethod::five_state) return slt_five_state_dfa(desc);
    return slt_window_dfa(desc);
}

RightLinearGrammar slt1_to_rlg(const SltDescription& desc) {
    desc.validate();
    if (desc.k != 1) throw ValidationError("the two-variable grammar needs window width 1");
    std::vector<Symbol> taken(desc.alphabet.symbols().begin(), desc.alphabet.symbols().end());
    Symbol s = fresh_symbol("S", taken);
    taken.push_back(s);
    Symbol s2 = fresh_symbol("S'", taken);
    RightLinearGrammar g;
    g.terminals = desc.alphabet;
    g.vars = {s, s2};
    g.start = s;
    for (const Word& w : desc.short_words) g.rules.push_back({s, w, std::nullopt});
    for (const Word& w : desc.prefix_windows)
        if (has_word(desc.suffix_windows, w)) g.rules.push_back({s, w, std::nullopt});
    for (const Word& w : desc.prefix_windows) g.rules.push_back({s, w, s2});
    for (const Word& w : desc.interior_windows) g.rules.push_back({s2, w, s2});
    for (const Word& w : desc.suffix_windows) g.rules.push_back({s2, w, std::nullopt});
    g.validate();
    return g;
}

namespace {

struct WindowSets {
    std::vector<Word> prefixes, interiors, suffixes;
};

WindowSets scan_windows(const Dfa& m, std::uint32_t k, std::uint32_t first, const std::vector<bool>& co0,
                        const std::vector<bool>& co1, const std::vector<bool>& from_inside) {
    const Alphabet& v = m.alphabet;
    WindowSets out;
    std::vector<std::uint32_t> digits(k, 0);
    digits[0] = first;
    for (;;) {
        Word w;
        w.reserve(k);
        for (std::uint32_t i = 0; i < k; ++i) w.push_back(v.at(digits[i]));
        if (co0[m.run_from(m.start, w)]) out.prefixes.push_back(w);
        bool suffix = false, interior = false;
        for (std::uint32_t q = 0; q < m.state_count && !(suffix && interior); ++q) {
            std::uint32_t end = m.run_from(q, w);
            if (m.accepting[end]) suffix = true;
            if (from_inside[q] && co1[end]) interior = true;
        }
        if (suffix) out.suffixes.push_back(w);
        if (interior) out.interiors.push_back(w);
        // odometer over positions 1..k-1; position 0 is fixed
        std::uint32_t i = k;
        while (i > 1) {
            --i;
            if (++digits[i] < v.size()) break;
            digits[i] = 0;
            if (i == 1) return out;
        }
        if (k == 1) return out;
    }
}

}  // namespace

SltDescription canonical_slt(const Dfa& d, std::uint32_t k, Exec exec) {
    if (k == 0) throw ValidationError("window width must be at least 1");
    Dfa m = minimize_canonical(d);
    std::vector<bool> co0 = coreachable_states(m, 0);
    std::vector<bool> co1 = coreachable_states(m, 1);
    // states reachable by at least one symbol; every state of m is reachable
    std::vector<bool> from_inside(m.state_count, false);
    for (std::uint32_t q = 0; q < m.state_count; ++q)
        for (std::uint32_t a = 0; a < m.alphabet.size(); ++a) from_inside[m.step(q, a)] = true;

    SltDescription desc;
    desc.k = k;
    desc.alphabet = m.alphabet;
    desc.short_words = k == 1 ? (m.accepting[m.start] ? std::vector<Word>{Word{}} : std::vector<Word>{})
                              : enumerate_dfa(m, k - 1);

    std::vector<WindowSets> parts(m.alphabet.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::uint32_t first = 0; first < m.alphabet.size(); ++first)
            parts[first] = scan_windows(m, k, first, co0, co1, from_inside);
    } else {
        for (std::uint32_t first = 0; first < m.alphabet.size(); ++first)
            parts[first] = scan_windows(m, k, first, co0, co1, from_inside);
    }
    for (WindowSets& p : parts) {
        desc.prefix_windows.insert(desc.prefix_windows.end(), p.prefixes.begin(), p.prefixes.end());
        desc.interior_windows.insert(desc.interior_windows.end(), p.interiors.begin(), p.interiors.end());
        desc.suffix_windows.insert(desc.suffix_windows.end(), p.suffixes.begin(), p.suffixes.end());
    }
    desc.validate();
    return desc;
}

SltDecision is_slt_k(const Dfa& d, std::uint32_t k, Exec exec) {
    SltDescription desc = canonical_slt(d, k, exec);
    Dfa candidate = slt_to_dfa(desc, SltMethod::window);
    EquivResult r = equivalent(candidate, d);
    SltDecision out;
    out.is_slt = r.equal;
    if (r.equal)
        out.description = std::move(desc);
    else
        out.counterexample = std::move(r.witness);
    return out;
}

std::optional<std::uint32_t> is_slt_upto(const Dfa& d, std::uint32_t k_max, Exec exec) {
    if (k_max == 0) throw ValidationError("the width bound must be at least 1");
    for (std::uint32_t k = 1; k <= k_max; ++k)
        if (is_slt_k(d, k, exec).is_slt) return k;
    return std::nullopt;
}

}  // namespace tcw
