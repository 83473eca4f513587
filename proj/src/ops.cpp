#include "tcw/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tcw/errors.hpp"
#include "tcw/exec.hpp"

namespace tcw {

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<bool> reachable_states(const Dfa& d) {
    std::vector<bool> seen(d.state_count, false);
    std::deque<uint32_t> queue{d.start};
    seen[d.start] = true;
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (uint32_t a = 0; a < d.alphabet.size(); ++a) {
            uint32_t t = d.step(q, a);
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<bool> coreachable_states(const Dfa& d, int min_steps) {
    if (min_steps >= 1) {
        // q can reach acceptance in >= 1 steps iff some successor can in >= 0.
        std::vector<bool> co0 = coreachable_states(d, 0);
        std::vector<bool> co(d.state_count, false);
        for (uint32_t q = 0; q < d.state_count; ++q)
            for (uint32_t a = 0; a < d.alphabet.size() && !co[q]; ++a)
                if (co0[d.step(q, a)]) co[q] = true;
        return co;
    }
    std::vector<std::vector<uint32_t>> preds(d.state_count);
    for (uint32_t q = 0; q < d.state_count; ++q)
        for (uint32_t a = 0; a < d.alphabet.size(); ++a) preds[d.step(q, a)].push_back(q);
    std::vector<bool> co(d.state_count, false);
    std::deque<uint32_t> queue;
    for (uint32_t q = 0; q < d.state_count; ++q)
        if (d.accepting[q]) {
            co[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (uint32_t p : preds[q])
            if (!co[p]) {
                co[p] = true;
                queue.push_back(p);
            }
    }
    return co;
}

Dfa minimize_canonical(const Dfa& d) {
    d.validate();
    const std::size_t asz = d.alphabet.size();

    // Restrict to reachable states.
    std::vector<bool> seen = reachable_states(d);
    std::vector<uint32_t> pack(d.state_count, UINT32_MAX);
    std::vector<uint32_t> states;
    for (uint32_t q = 0; q < d.state_count; ++q)
        if (seen[q]) {
            pack[q] = static_cast<uint32_t>(states.size());
            states.push_back(q);
        }
    const uint32_t n = static_cast<uint32_t>(states.size());

    // Moore refinement: split classes by (acceptance, successor classes).
    std::vector<uint32_t> cls(n);
    for (uint32_t i = 0; i < n; ++i) cls[i] = d.accepting[states[i]] ? 1 : 0;
    std::size_t count = 2;
    for (;;) {
        std::map<std::vector<uint32_t>, uint32_t> fresh;
        std::vector<uint32_t> next_cls(n);
        std::vector<uint32_t> sig(asz + 1);
        for (uint32_t i = 0; i < n; ++i) {
            sig[0] = cls[i];
            for (uint32_t a = 0; a < asz; ++a) sig[a + 1] = cls[pack[d.step(states[i], a)]];
            auto [it, ignored] = fresh.try_emplace(sig, static_cast<uint32_t>(fresh.size()));
            next_cls[i] = it->second;
        }
        if (fresh.size() == count) {
            cls = std::move(next_cls);
            break;
        }
        count = fresh.size();
        cls = std::move(next_cls);
    }

    // Breadth-first renumbering from the start class, in alphabet order.
    const uint32_t nclasses = static_cast<uint32_t>(count);
    std::vector<uint32_t> rep(nclasses, UINT32_MAX);
    for (uint32_t i = 0; i < n; ++i)
        if (rep[cls[i]] == UINT32_MAX) rep[cls[i]] = i;
    std::vector<uint32_t> order(nclasses, UINT32_MAX);
    std::deque<uint32_t> queue{cls[pack[d.start]]};
    order[cls[pack[d.start]]] = 0;
    uint32_t assigned = 1;
    while (!queue.empty()) {
        uint32_t c = queue.front();
        queue.pop_front();
        uint32_t q = states[rep[c]];
        for (uint32_t a = 0; a < asz; ++a) {
            uint32_t tc = cls[pack[d.step(q, a)]];
            if (order[tc] == UINT32_MAX) {
                order[tc] = assigned++;
                queue.push_back(tc);
            }
        }
    }

    Dfa out;
    out.alphabet = d.alphabet;
    out.state_count = assigned;
    out.start = 0;
    out.accepting.assign(assigned, false);
    out.next.assign(static_cast<std::size_t>(assigned) * asz, 0);
    for (uint32_t c = 0; c < nclasses; ++c) {
        if (order[c] == UINT32_MAX) continue;  // class unreachable after merging (cannot happen)
        uint32_t q = states[rep[c]];
        out.accepting[order[c]] = d.accepting[q];
        for (uint32_t a = 0; a < asz; ++a) out.next[static_cast<std::size_t>(order[c]) * asz + a] = order[cls[pack[d.step(q, a)]]];
    }
    return out;
}

Dfa determinize(const Nfa& n, std::size_t state_cap) {
    n.validate();
    const std::size_t asz = n.alphabet.size();

    auto closure = [&](std::vector<uint32_t> set) {
        std::vector<uint32_t> stack = set;
        std::vector<bool> in(n.state_count, false);
        for (uint32_t q : set) in[q] = true;
        while (!stack.empty()) {
            uint32_t q = stack.back();
            stack.pop_back();
            for (uint32_t t : n.eps[q])
                if (!in[t]) {
                    in[t] = true;
                    set.push_back(t);
                    stack.push_back(t);
                }
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        return set;
    };

    std::map<std::vector<uint32_t>, uint32_t> ids;
    std::vector<std::vector<uint32_t>> subsets;
    auto intern = [&](std::vector<uint32_t> set) {
        auto [it, fresh] = ids.try_emplace(std::move(set), static_cast<uint32_t>(subsets.size()));
        if (fresh) {
            subsets.push_back(it->first);
            if (subsets.size() > state_cap)
                throw ResourceError("determinization exceeded the state budget of " + std::to_string(state_cap) + " states");
        }
        return it->second;
    };

    Dfa out;
    out.alphabet = n.alphabet;
    out.start = intern(closure(n.starts));
    std::vector<std::vector<uint32_t>> rows;
    for (uint32_t q = 0; q < subsets.size(); ++q) {
        std::vector<uint32_t> row(asz);
        for (uint32_t a = 0; a < asz; ++a) {
            std::vector<uint32_t> step;
            for (uint32_t s : subsets[q])
                step.insert(step.end(), n.moves[s][a].begin(), n.moves[s][a].end());
            row[a] = intern(closure(std::move(step)));
        }
        rows.push_back(std::move(row));
    }
    out.state_count = static_cast<uint32_t>(subsets.size());
    out.accepting.assign(out.state_count, false);
    for (uint32_t q = 0; q < out.state_count; ++q)
        for (uint32_t s : subsets[q])
            if (n.accepting[s]) out.accepting[q] = true;
    out.next.assign(static_cast<std::size_t>(out.state_count) * asz, 0);
    for (uint32_t q = 0; q < out.state_count; ++q)
        for (uint32_t a = 0; a < asz; ++a) out.next[static_cast<std::size_t>(q) * asz + a] = rows[q][a];
    return out;
}

Dfa determinize_minimize(const Nfa& n, std::size_t state_cap) {
    return minimize_canonical(determinize(n, state_cap));
}

Dfa combine(const Dfa& a, const Dfa& b, SetOp op) {
    if (!(a.alphabet == b.alphabet))
        throw ValidationError("combine: operands use different alphabets");
    const std::size_t asz = a.alphabet.size();
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> ids;
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    auto intern = [&](uint32_t qa, uint32_t qb) {
        auto [it, fresh] = ids.try_emplace({qa, qb}, static_cast<uint32_t>(pairs.size()));
        if (fresh) pairs.emplace_back(qa, qb);
        return it->second;
    };
    Dfa out;
    out.alphabet = a.alphabet;
    out.start = intern(a.start, b.start);
    std::vector<uint32_t> flat;
    for (uint32_t q = 0; q < pairs.size(); ++q) {
        auto [qa, qb] = pairs[q];
        for (uint32_t s = 0; s < asz; ++s) flat.push_back(intern(a.step(qa, s), b.step(qb, s)));
    }
    out.state_count = static_cast<uint32_t>(pairs.size());
    out.next = std::move(flat);
    out.accepting.assign(out.state_count, false);
    for (uint32_t q = 0; q < out.state_count; ++q) {
        bool ina = a.accepting[pairs[q].first], inb = b.accepting[pairs[q].second];
        switch (op) {
            case SetOp::set_union: out.accepting[q] = ina || inb; break;
            case SetOp::set_intersection: out.accepting[q] = ina && inb; break;
            case SetOp::set_difference: out.accepting[q] = ina && !inb; break;
        }
    }
    return minimize_canonical(out);
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    for (std::size_t q = 0; q < out.accepting.size(); ++q) out.accepting[q] = !out.accepting[q];
    return minimize_canonical(out);
}

EquivResult equivalent(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet))
        throw ValidationError("equivalent: operands use different alphabets");
    const std::size_t asz = a.alphabet.size();

    struct Node {
        uint32_t qa, qb;
        uint32_t parent;
        uint32_t via;
    };
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> ids;
    std::vector<Node> nodes;
    auto differs = [&](uint32_t qa, uint32_t qb) { return a.accepting[qa] != b.accepting[qb]; };
    auto build_word = [&](uint32_t idx) {
        Word w;
        while (nodes[idx].parent != UINT32_MAX) {
            w.push_back(a.alphabet.at(nodes[idx].via));
            idx = nodes[idx].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    nodes.push_back({a.start, b.start, UINT32_MAX, 0});
    ids.emplace(std::make_pair(a.start, b.start), 0u);
    if (differs(a.start, b.start)) return {false, Word{}};
    for (uint32_t head = 0; head < nodes.size(); ++head) {
        for (uint32_t s = 0; s < asz; ++s) {
            uint32_t qa = a.step(nodes[head].qa, s), qb = b.step(nodes[head].qb, s);
            auto [it, fresh] = ids.try_emplace({qa, qb}, static_cast<uint32_t>(nodes.size()));
            if (!fresh) continue;
            nodes.push_back({qa, qb, head, s});
            if (differs(qa, qb)) return {false, build_word(static_cast<uint32_t>(nodes.size()) - 1)};
        }
    }
    return {true, std::nullopt};
}

bool subset_language(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet))
        throw ValidationError("subset_language: operands use different alphabets");
    const std::size_t asz = a.alphabet.size();
    std::set<std::pair<uint32_t, uint32_t>> seen;
    std::vector<std::pair<uint32_t, uint32_t>> queue;
    auto visit = [&](uint32_t qa, uint32_t qb) {
        if (seen.emplace(qa, qb).second) queue.emplace_back(qa, qb);
    };
    visit(a.start, b.start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [qa, qb] = queue[head];
        if (a.accepting[qa] && !b.accepting[qb]) return false;
        for (uint32_t s = 0; s < asz; ++s) visit(a.step(qa, s), b.step(qb, s));
    }
    return true;
}

bool is_empty_language(const Dfa& d) {
    std::vector<bool> seen = reachable_states(d);
    for (uint32_t q = 0; q < d.state_count; ++q)
        if (seen[q] && d.accepting[q]) return false;
    return true;
}

std::optional<Word> shortest_word(const Dfa& d) {
    EquivResult r = equivalent(d, dfa_empty(d.alphabet));
    return r.witness;
}

std::vector<Word> enumerate_dfa(const Dfa& d, std::size_t max_len) {
    d.validate();
    // Distance from each state to acceptance, for pruning dead prefixes.
    std::vector<std::size_t> dist(d.state_count, SIZE_MAX);
    {
        std::vector<std::vector<uint32_t>> preds(d.state_count);
        for (uint32_t q = 0; q < d.state_count; ++q)
            for (uint32_t a = 0; a < d.alphabet.size(); ++a) preds[d.step(q, a)].push_back(q);
        std::deque<uint32_t> queue;
        for (uint32_t q = 0; q < d.state_count; ++q)
            if (d.accepting[q]) {
                dist[q] = 0;
                queue.push_back(q);
            }
        while (!queue.empty()) {
            uint32_t q = queue.front();
            queue.pop_front();
            for (uint32_t p : preds[q])
                if (dist[p] == SIZE_MAX) {
                    dist[p] = dist[q] + 1;
                    queue.push_back(p);
                }
        }
    }

    std::vector<Word> out;
    struct Item {
        Word w;
        uint32_t q;
    };
    std::vector<Item> level;
    if (dist[d.start] != SIZE_MAX && dist[d.start] <= max_len) level.push_back({{}, d.start});
    for (std::size_t len = 0; len <= max_len && !level.empty(); ++len) {
        for (const Item& it : level)
            if (d.accepting[it.q]) out.push_back(it.w);
        if (len == max_len) break;
        std::vector<Item> next_level;
        for (const Item& it : level) {
            for (uint32_t a = 0; a < d.alphabet.size(); ++a) {
                uint32_t t = d.step(it.q, a);
                if (dist[t] == SIZE_MAX || dist[t] > max_len - len - 1) continue;
                Word w = it.w;
                w.push_back(d.alphabet.at(a));
                next_level.push_back({std::move(w), t});
            }
        }
        level = std::move(next_level);
    }
    return out;
}

std::size_t state_complexity(const Dfa& d) { return minimize_canonical(d).state_count; }

Dfa suffix_language(const Dfa& d) {
    Dfa m = minimize_canonical(d);  // all states reachable afterwards
    Nfa n = dfa_to_nfa(m);
    n.starts.clear();
    for (uint32_t q = 0; q < m.state_count; ++q) n.starts.push_back(q);
    return determinize_minimize(n);
}

bool is_suffix_closed(const Dfa& d) {
    return is_empty_language(combine(suffix_language(d), d, SetOp::set_difference));
}

bool finite_language(const Dfa& d, std::vector<Word>* words) {
    Dfa m = minimize_canonical(d);
    std::vector<bool> useful = coreachable_states(m, 0);
    // A cycle through a useful state makes the language infinite. All states
    // are reachable after minimization.
    std::vector<int> color(m.state_count, 0);
    std::vector<std::pair<uint32_t, uint32_t>> stack;
    for (uint32_t q0 = 0; q0 < m.state_count; ++q0) {
        if (!useful[q0] || color[q0] != 0) continue;
        stack.push_back({q0, 0});
        color[q0] = 1;
        while (!stack.empty()) {
            auto& [q, a] = stack.back();
            if (a == m.alphabet.size()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            uint32_t t = m.step(q, a++);
            if (!useful[t]) continue;
            if (color[t] == 1) return false;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    if (words) *words = enumerate_dfa(m, m.state_count);
    return true;
}

}  // namespace tcw
