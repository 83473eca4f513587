#include "tcw/rlg_search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "tcw/errors.hpp"
#include "tcw/nfa.hpp"
#include "tcw/ops.hpp"

namespace tcw {

namespace {

constexpr int32_t kStop = -1;

// Rule over variable indices and symbol indices; kStop marks a terminating
// rule. Variables are canonically numbered by first use, so two partial
// grammars are equal exactly when their rule sets are.
struct IRule {
    uint32_t lhs = 0;
    std::vector<uint32_t> body;
    int32_t next = kStop;

    bool operator==(const IRule&) const = default;
};

// Canonical rule order: by variable, then body in length-then-lex order,
// then continuation variable with terminating rules last.
bool rule_less(const IRule& a, const IRule& b) {
    if (a.lhs != b.lhs) return a.lhs < b.lhs;
    if (a.body.size() != b.body.size()) return a.body.size() < b.body.size();
    if (a.body != b.body) return a.body < b.body;
    uint32_t an = a.next == kStop ? UINT32_MAX : static_cast<uint32_t>(a.next);
    uint32_t bn = b.next == kStop ? UINT32_MAX : static_cast<uint32_t>(b.next);
    return an < bn;
}

std::string rule_key(const IRule& r) {
    std::string s = std::to_string(r.lhs);
    s += ':';
    for (uint32_t v : r.body) {
        s += std::to_string(v);
        s += '.';
    }
    s += ':';
    s += std::to_string(r.next);
    s += ';';
    return s;
}

std::string node_key(const std::vector<IRule>& rules) {
    std::string s;
    for (const IRule& r : rules) s += rule_key(r);
    return s;
}

uint32_t var_count(const std::vector<IRule>& rules) {
    uint32_t n = 1;
    for (const IRule& r : rules) {
        n = std::max(n, r.lhs + 1);
        if (r.next != kStop) n = std::max(n, static_cast<uint32_t>(r.next) + 1);
    }
    return n;
}

// Minimal automaton of the partial grammar's language: one state per
// variable, a shared accepting state, and chain states for long bodies.
Dfa partial_language(const std::vector<IRule>& rules, const Alphabet& alphabet) {
    Nfa n = nfa_blank(alphabet);
    uint32_t vars = var_count(rules);
    for (uint32_t i = 0; i < vars; ++i) n.add_state();
    uint32_t accept = n.add_state(true);
    n.starts = {0};
    for (const IRule& r : rules) {
        uint32_t target = r.next == kStop ? accept : static_cast<uint32_t>(r.next);
        if (r.body.empty()) {
            n.add_eps(r.lhs, target);
            continue;
        }
        uint32_t cur = r.lhs;
        for (std::size_t j = 0; j + 1 < r.body.size(); ++j) {
            uint32_t mid = n.add_state();
            n.add_move(cur, r.body[j], mid);
            cur = mid;
        }
        n.add_move(cur, r.body.back(), target);
    }
    return determinize_minimize(n);
}

// Solution ordering key: fixed-width fields make plain string comparison
// agree with (rule count, total body length, sorted bodies, rule list).
void append_hex(std::string& s, uint64_t v, int digits) {
    static const char* hex = "0123456789abcdef";
    for (int i = digits - 1; i >= 0; --i) s += hex[(v >> (4 * i)) & 0xf];
}

std::string solution_key(const std::vector<IRule>& rules) {
    std::string s;
    append_hex(s, rules.size(), 8);
    uint64_t total = 0;
    for (const IRule& r : rules) total += r.body.size();
    append_hex(s, total, 8);
    std::vector<std::string> bodies;
    for (const IRule& r : rules) {
        std::string b;
        append_hex(b, r.body.size(), 4);
        for (uint32_t v : r.body) append_hex(b, v, 4);
        bodies.push_back(std::move(b));
    }
    std::sort(bodies.begin(), bodies.end());
    for (const std::string& b : bodies) {
        s += b;
        s += '|';
    }
    s += node_key(rules);
    return s;
}

struct Shared {
    const Dfa* target = nullptr;
    const Alphabet* alphabet = nullptr;
    SearchBudget budget;
    uint64_t cap = 0;
    std::atomic<uint64_t> states{0};
    std::atomic<bool> capped{false};
    // Rule count of the best solution seen anywhere; used only for pruning,
    // so cross-thread timing never changes the final answer.
    std::atomic<uint32_t> best_count{UINT32_MAX};

    // Counts one search state; false once the cap is blown.
    bool tick() {
        if (states.fetch_add(1, std::memory_order_relaxed) + 1 > cap) {
            capped.store(true, std::memory_order_relaxed);
        }
        return !capped.load(std::memory_order_relaxed);
    }
};

struct Local {
    std::set<std::string> visited;
    std::optional<std::string> best_key;
    std::vector<IRule> best_rules;
};

// Enumerates the derivations of `w` from the start variable, using existing
// rules freely and at most `room` new ones; every completed derivation
// contributes its set of new rules. New rule bodies are the substrings of
// `w` at the position being derived, ensuring all proposals are factors of
// the target language. Fresh variables must appear in index order, and a
// run of empty-bodied steps may not revisit a variable.
class DerivEnum {
public:
    DerivEnum(Shared& sh, const std::vector<IRule>& base, uint32_t base_vars,
              const std::vector<uint32_t>& w)
        : sh_(sh), base_(base), w_(w), base_vars_(base_vars) {}

    std::vector<std::vector<IRule>> run() {
        uint32_t room = sh_.budget.max_prods - static_cast<uint32_t>(base_.size());
        step(0, 0, 1u, room, base_vars_);
        return std::move(out_);
    }

private:
    bool have_rule(const IRule& r) const {
        auto it = std::lower_bound(base_.begin(), base_.end(), r, rule_less);
        if (it != base_.end() && *it == r) return true;
        return std::find(added_.begin(), added_.end(), r) != added_.end();
    }

    void record() {
        if (added_.empty()) return;
        std::vector<IRule> set = added_;
        std::sort(set.begin(), set.end(), rule_less);
        if (seen_.insert(node_key(set)).second) out_.push_back(std::move(set));
    }

    void step(std::size_t pos, uint32_t var, uint32_t mask, uint32_t room, uint32_t used) {
        if (!sh_.tick()) return;
        std::size_t rest = w_.size() - pos;
        std::size_t maxl = std::min<std::size_t>(sh_.budget.max_rhs_len, rest);
        for (std::size_t l = 0; l <= maxl; ++l) {
            IRule r;
            r.lhs = var;
            r.body.assign(w_.begin() + pos, w_.begin() + pos + l);
            if (pos + l == w_.size()) {
                r.next = kStop;
                bool have = have_rule(r);
                if (have || room >= 1) {
                    if (!have) added_.push_back(r);
                    record();
                    if (!have) added_.pop_back();
                }
            }
            uint32_t cand_max = std::min(used, sh_.budget.max_vars - 1);
            for (uint32_t nxt = 0; nxt <= cand_max; ++nxt) {
                if (l == 0 && ((mask >> nxt) & 1u)) continue;
                r.next = static_cast<int32_t>(nxt);
                bool have = have_rule(r);
                if (!have && room == 0) continue;
                uint32_t nmask = l == 0 ? (mask | (1u << nxt)) : (1u << nxt);
                if (!have) added_.push_back(r);
                step(pos + l, nxt, nmask, room - (have ? 0u : 1u), std::max(used, nxt + 1));
                if (!have) added_.pop_back();
            }
        }
    }

    Shared& sh_;
    const std::vector<IRule>& base_;
    const std::vector<uint32_t>& w_;
    uint32_t base_vars_;
    std::vector<IRule> added_;
    std::set<std::string> seen_;
    std::vector<std::vector<IRule>> out_;
};

void note_solution(Shared& sh, Local& lo, const std::vector<IRule>& rules) {
    std::string key = solution_key(rules);
    if (!lo.best_key || key < *lo.best_key) {
        lo.best_key = std::move(key);
        lo.best_rules = rules;
    }
    uint32_t count = static_cast<uint32_t>(rules.size());
    uint32_t cur = sh.best_count.load(std::memory_order_relaxed);
    while (count < cur &&
           !sh.best_count.compare_exchange_weak(cur, count, std::memory_order_relaxed)) {
    }
}

void dfs(Shared& sh, Local& lo, const std::vector<IRule>& rules, bool parallel_root) {
    if (!sh.tick()) return;
    Dfa dp = partial_language(rules, *sh.alphabet);
    // Rules only ever get added, so an overshoot can never be repaired.
    if (!subset_language(dp, *sh.target)) return;
    EquivResult eq = equivalent(dp, *sh.target);
    if (eq.equal) {
        note_solution(sh, lo, rules);
        return;
    }
    // Children carry at least one extra rule; give up when even a tie with
    // the best known rule count is out of reach.
    if (rules.size() + 1 > sh.best_count.load(std::memory_order_relaxed)) return;
    if (rules.size() >= sh.budget.max_prods) return;

    std::vector<uint32_t> w;
    for (const Symbol& s : *eq.witness) w.push_back(*sh.alphabet->index_of(s));
    std::vector<std::vector<IRule>> additions = DerivEnum(sh, rules, var_count(rules), w).run();

    std::vector<std::pair<std::string, std::vector<IRule>>> kids;
    for (const std::vector<IRule>& add : additions) {
        std::vector<IRule> child = rules;
        child.insert(child.end(), add.begin(), add.end());
        std::sort(child.begin(), child.end(), rule_less);
        std::string key = node_key(child);
        if (lo.visited.insert(key).second) kids.emplace_back(std::move(key), std::move(child));
    }
    std::sort(kids.begin(), kids.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    if (!parallel_root) {
        for (const auto& [key, child] : kids) dfs(sh, lo, child, false);
        return;
    }
    std::vector<Local> locals(kids.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < kids.size(); ++i) dfs(sh, locals[i], kids[i].second, false);
    for (Local& part : locals) {
        if (!part.best_key) continue;
        if (!lo.best_key || *part.best_key < *lo.best_key) {
            lo.best_key = std::move(part.best_key);
            lo.best_rules = std::move(part.best_rules);
        }
    }
}

RightLinearGrammar to_grammar(const std::vector<IRule>& rules, const Alphabet& alphabet) {
    RightLinearGrammar g;
    g.terminals = alphabet;
    std::vector<Symbol> taken = alphabet.symbols();
    uint32_t vars = var_count(rules);
    for (uint32_t i = 0; i < vars; ++i) {
        Symbol name = fresh_symbol(i == 0 ? "S" : "X" + std::to_string(i), taken);
        g.vars.push_back(name);
        taken.push_back(name);
    }
    g.start = g.vars[0];
    std::vector<IRule> ordered = rules;
    std::sort(ordered.begin(), ordered.end(), rule_less);
    for (const IRule& r : ordered) {
        RlgRule rule;
        rule.lhs = g.vars[r.lhs];
        for (uint32_t v : r.body) rule.body.push_back(alphabet.at(v));
        if (r.next != kStop) rule.next = g.vars[static_cast<uint32_t>(r.next)];
        g.rules.push_back(std::move(rule));
    }
    g.validate();
    return g;
}

}  // namespace

SearchResult search_rlg(const Dfa& d, const SearchBudget& budget, const SearchOptions& opts) {
    if (budget.max_vars < 1 || budget.max_prods < 1 || budget.max_rhs_len < 1)
        throw ValidationError("search_rlg: budget components must be at least 1");
    if (budget.max_vars > 31)
        throw ValidationError("search_rlg: at most 31 variables are supported");
    d.validate();

    Shared sh;
    Dfa target = minimize_canonical(d);
    sh.target = &target;
    sh.alphabet = &target.alphabet;
    sh.budget = budget;
    sh.cap = opts.state_cap;

    Local lo;
    dfs(sh, lo, {}, opts.exec == Exec::parallel);
    if (sh.capped.load())
        throw ResourceError("search_rlg: exceeded the cap of " + std::to_string(opts.state_cap) +
                            " search states");

    SearchResult res;
    res.states = sh.states.load();
    if (lo.best_key) res.grammar = to_grammar(lo.best_rules, target.alphabet);
    return res;
}

}  // namespace tcw
