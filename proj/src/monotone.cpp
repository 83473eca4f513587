#include "tcw/monotone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tcw/errors.hpp"
#include "tcw/rlg.hpp"

namespace tcw {

namespace {

bool contains(const std::vector<Symbol>& v, Symbol s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::string side_str(const Word& w) {
    if (w.empty()) return "%eps";
    std::string out;
    for (Symbol s : w) {
        if (!out.empty()) out += " ";
        out += s.name();
    }
    return out;
}

// The hygiene checks shared by monotone and Kuroda grammars: symbol tables,
// symbol membership per rule, the start -> %eps side condition, duplicates.
std::vector<std::string> rewriting_violations(const std::vector<Symbol>& vars,
                                              const Alphabet& terminals, Symbol start,
                                              const std::vector<MonotoneRule>& rules) {
    std::vector<std::string> out;
    std::set<Symbol> var_set;
    for (Symbol v : vars) {
        if (!var_set.insert(v).second) out.push_back("duplicate variable " + v.name());
        if (terminals.contains(v)) out.push_back("variable " + v.name() + " is also a terminal");
    }
    if (!var_set.contains(start)) out.push_back("start symbol " + start.name() + " is not a variable");

    bool start_on_rhs = false;
    for (const MonotoneRule& r : rules)
        for (Symbol s : r.rhs)
            if (s == start) start_on_rhs = true;

    std::set<std::pair<Word, Word>> seen;
    for (const MonotoneRule& r : rules) {
        for (Symbol s : r.lhs)
            if (!var_set.contains(s) && !terminals.contains(s))
                out.push_back("lhs symbol " + s.name() + " in '" + print_monotone_rule(r) +
                              "' is neither a variable nor a terminal");
        for (Symbol s : r.rhs)
            if (!var_set.contains(s) && !terminals.contains(s))
                out.push_back("rhs symbol " + s.name() + " in '" + print_monotone_rule(r) +
                              "' is neither a variable nor a terminal");
        if (std::none_of(r.lhs.begin(), r.lhs.end(), [&](Symbol s) { return var_set.contains(s); }))
            out.push_back("rule '" + print_monotone_rule(r) + "' has no variable on its left-hand side");
        if (r.rhs.size() < r.lhs.size()) {
            if (r.lhs == Word{start} && r.rhs.empty()) {
                if (start_on_rhs)
                    out.push_back("erasing rule '" + print_monotone_rule(r) + "' while " +
                                  start.name() + " occurs on a right-hand side");
            } else {
                out.push_back("shrinking rule '" + print_monotone_rule(r) +
                              "' (only start -> %eps may shrink)");
            }
        }
        if (!seen.insert({r.lhs, r.rhs}).second)
            out.push_back("duplicate rule '" + print_monotone_rule(r) + "'");
    }
    return out;
}

void throw_first(const std::vector<std::string>& v) {
    if (!v.empty()) throw ValidationError(v.front());
}

}  // namespace

std::string print_monotone_rule(const MonotoneRule& r) {
    return side_str(r.lhs) + " -> " + side_str(r.rhs);
}

std::vector<std::string> monotone_violations(const MonotoneGrammar& g) {
    return rewriting_violations(g.vars, g.terminals, g.start, g.rules);
}

void MonotoneGrammar::validate() const { throw_first(monotone_violations(*this)); }

std::vector<Word> enumerate_monotone(const MonotoneGrammar& g, std::size_t max_len) {
    g.validate();
    auto all_terminal = [&](const Word& w) {
        return std::all_of(w.begin(), w.end(), [&](Symbol s) { return g.terminals.contains(s); });
    };

    std::set<Word> visited;
    std::set<Word> words;
    std::vector<Word> stack;
    visited.insert({g.start});
    stack.push_back({g.start});
    while (!stack.empty()) {
        Word form = std::move(stack.back());
        stack.pop_back();
        if (all_terminal(form)) {
            if (form.size() <= max_len) words.insert(form);
            continue;
        }
        for (const MonotoneRule& r : g.rules) {
            if (r.lhs.size() > form.size()) continue;
            for (std::size_t i = 0; i + r.lhs.size() <= form.size(); ++i) {
                if (!std::equal(r.lhs.begin(), r.lhs.end(), form.begin() + i)) continue;
                Word next(form.begin(), form.begin() + i);
                next.insert(next.end(), r.rhs.begin(), r.rhs.end());
                next.insert(next.end(), form.begin() + i + r.lhs.size(), form.end());
                // Forms never shrink back under max_len once over it (only
                // the axiom may erase), so dropping long forms loses no word
                // of length <= max_len.
                if (next.size() > max_len) continue;
                if (visited.insert(next).second) stack.push_back(std::move(next));
            }
        }
    }
    std::vector<Word> out(words.begin(), words.end());
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return word_less(a, b, g.terminals); });
    return out;
}

std::vector<std::string> kuroda_violations(const KurodaGrammar& g) {
    std::vector<std::string> out = rewriting_violations(g.vars, g.terminals, g.start, g.rules);
    auto is_var = [&](Symbol s) { return contains(g.vars, s); };
    for (const MonotoneRule& r : g.rules) {
        bool ok = false;
        if (r.lhs.size() == 1 && is_var(r.lhs[0])) {
            if (r.rhs.empty())
                ok = r.lhs[0] == g.start;  // side condition reported above
            else if (r.rhs.size() == 1)
                ok = is_var(r.rhs[0]) || g.terminals.contains(r.rhs[0]);
            else if (r.rhs.size() == 2)
                ok = is_var(r.rhs[0]) && is_var(r.rhs[1]);
        } else if (r.lhs.size() == 2 && is_var(r.lhs[0]) && is_var(r.lhs[1])) {
            ok = r.rhs.size() == 2 && is_var(r.rhs[0]) && is_var(r.rhs[1]);
        }
        if (!ok)
            out.push_back("rule '" + print_monotone_rule(r) +
                          "' does not match AB -> CD, A -> BC, A -> B, or A -> a");
    }
    return out;
}

void KurodaGrammar::validate() const { throw_first(kuroda_violations(*this)); }

MonotoneGrammar kuroda_as_monotone(const KurodaGrammar& g) {
    return MonotoneGrammar{g.vars, g.terminals, g.start, g.rules};
}

KurodaGrammar monotone_to_kuroda(const MonotoneGrammar& g) {
    g.validate();
    KurodaGrammar k;
    k.terminals = g.terminals;
    k.start = g.start;
    k.vars = g.vars;
    std::vector<Symbol> taken = g.vars;
    for (Symbol t : g.terminals.symbols()) taken.push_back(t);
    auto add_var = [&](const std::string& base) {
        Symbol v = fresh_symbol(base, taken);
        taken.push_back(v);
        k.vars.push_back(v);
        return v;
    };
    auto is_input_var = [&](Symbol s) { return contains(g.vars, s); };

    // Phase one: terminal separation. Every terminal occurrence outside an
    // exact A -> a rule is replaced by a dedicated variable X_a, and X_a -> a
    // is appended per touched terminal.
    std::vector<MonotoneRule> separated;
    std::map<Symbol, Symbol> shield;
    auto shielded = [&](const Word& w) {
        Word out;
        out.reserve(w.size());
        for (Symbol s : w) {
            if (!g.terminals.contains(s)) {
                out.push_back(s);
                continue;
            }
            auto it = shield.find(s);
            if (it == shield.end()) it = shield.emplace(s, add_var("X_" + s.name())).first;
            out.push_back(it->second);
        }
        return out;
    };
    for (const MonotoneRule& r : g.rules) {
        bool keep = r.lhs.size() == 1 && is_input_var(r.lhs[0]) && r.rhs.size() == 1 &&
                    g.terminals.contains(r.rhs[0]);
        separated.push_back(keep ? r : MonotoneRule{shielded(r.lhs), shielded(r.rhs)});
    }
    for (Symbol t : g.terminals.symbols()) {
        auto it = shield.find(t);
        if (it != shield.end()) separated.push_back({{it->second}, {t}});
    }

    // Phase two: body splitting. A long right side under a single variable
    // becomes a chain of Y pairs; a strictly growing context rule defers the
    // surplus to a tail variable K expanded the same way.
    //
    // Phase three: context chaining. A length-preserving rule on three or
    // more variables becomes AB -> CD steps linked by Z variables.
    std::size_t label = 0;
    for (const MonotoneRule& r : separated) {
        ++label;
        std::size_t y = 0;
        auto split_body = [&](Symbol lhs, const Word& rhs) {
            Symbol head = lhs;
            std::size_t i = 0;
            while (rhs.size() - i > 2) {
                Symbol next = add_var("Y_" + std::to_string(label) + "_" + std::to_string(++y));
                k.rules.push_back({{head}, {rhs[i], next}});
                head = next;
                ++i;
            }
            k.rules.push_back({{head}, Word(rhs.begin() + i, rhs.end())});
        };
        if (r.lhs.size() == 1) {
            if (r.rhs.size() <= 2)
                k.rules.push_back(r);
            else
                split_body(r.lhs[0], r.rhs);
            continue;
        }
        Word rhs = r.rhs;
        if (rhs.size() > r.lhs.size()) {
            Symbol tail = add_var("K_" + std::to_string(label));
            Word surplus(rhs.begin() + r.lhs.size() - 1, rhs.end());
            rhs.erase(rhs.begin() + r.lhs.size() - 1, rhs.end());
            rhs.push_back(tail);
            split_body(tail, surplus);
        }
        if (r.lhs.size() == 2) {
            k.rules.push_back({r.lhs, rhs});
            continue;
        }
        Symbol carry = r.lhs[0];
        for (std::size_t i = 0; i + 2 < r.lhs.size(); ++i) {
            Symbol next = add_var("Z_" + std::to_string(label) + "_" + std::to_string(i + 2));
            k.rules.push_back({{carry, r.lhs[i + 1]}, {rhs[i], next}});
            carry = next;
        }
        k.rules.push_back({{carry, r.lhs.back()}, {rhs[r.lhs.size() - 2], rhs[r.lhs.size() - 1]}});
    }
    k.validate();
    return k;
}

}  // namespace tcw
