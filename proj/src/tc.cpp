#include "tcw/tc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "tcw/errors.hpp"
#include "tcw/ops.hpp"

namespace tcw {

namespace {

// The rewriting sites of a configuration: which cells hold active
// nonterminals, and which bodies may replace each of them.
struct Sites {
    std::vector<std::uint32_t> cell_index;             // ascending
    std::vector<std::vector<const CfgRule*>> options;  // per site, rule order
    bool stuck = false;                                // some site has no rule
};

Sites collect_sites(const LevelConfig& c, const Cfg& core) {
    Sites s;
    for (std::uint32_t i = 0; i < c.cells.size(); ++i) {
        const LevelCell& cell = c.cells[i];
        if (cell.frozen || !core.is_var(cell.symbol)) continue;
        s.cell_index.push_back(i);
        s.options.push_back(core.rules_for(cell.symbol));
        if (s.options.back().empty()) s.stuck = true;
    }
    return s;
}

// Builds the successor for one complete choice vector: chosen bodies enter
// as active cells, active terminals freeze, frozen cells persist.
LevelConfig apply_choices(const LevelConfig& c, const Sites& sites, const std::vector<std::size_t>& pick) {
    LevelConfig s;
    s.depth = c.depth + 1;
    std::size_t site = 0;
    for (std::uint32_t i = 0; i < c.cells.size(); ++i) {
        const LevelCell& cell = c.cells[i];
        if (site < sites.cell_index.size() && sites.cell_index[site] == i) {
            for (Symbol b : sites.options[site][pick[site]]->body) s.cells.push_back({b, false});
            ++site;
        } else if (cell.frozen) {
            s.cells.push_back(cell);
        } else {
            s.cells.push_back({cell.symbol, true});
        }
    }
    return s;
}

std::vector<TraceStep> steps_of(const Sites& sites, const std::vector<std::size_t>& pick) {
    std::vector<TraceStep> steps;
    steps.reserve(sites.cell_index.size());
    for (std::size_t i = 0; i < sites.cell_index.size(); ++i) {
        const CfgRule* r = sites.options[i][pick[i]];
        steps.push_back({sites.cell_index[i], r->lhs, r->body});
    }
    return steps;
}

}  // namespace

Alphabet tc_level_alphabet(const Cfg& core) {
    std::vector<Symbol> syms = core.vars;
    for (Symbol t : core.terminals.symbols()) syms.push_back(t);
    return Alphabet(std::move(syms));
}

std::vector<std::string> validate_tc(const TcGrammar& g) {
    std::vector<std::string> out = cfg_violations(g.core);
    std::set<Symbol> expected;
    for (Symbol v : g.core.vars) expected.insert(v);
    for (Symbol t : g.core.terminals.symbols()) expected.insert(t);
    std::set<Symbol> got(g.control.alphabet.symbols().begin(), g.control.alphabet.symbols().end());
    if (expected != got)
        out.push_back("control alphabet mismatch: the control reads '" + g.control.alphabet.str() +
                      "' but vars ∪ terminals is '" + tc_level_alphabet(g.core).str() + "'");
    try {
        g.control.validate();
    } catch (const ValidationError& e) {
        out.push_back(std::string("control automaton: ") + e.what());
    }
    return out;
}

void TcGrammar::validate() const {
    std::vector<std::string> v = validate_tc(*this);
    if (!v.empty()) throw ValidationError(v.front());
}

Word LevelConfig::active_projection() const {
    Word w;
    for (const LevelCell& cell : cells)
        if (!cell.frozen) w.push_back(cell.symbol);
    return w;
}

Word LevelConfig::full_form() const {
    Word w;
    w.reserve(cells.size());
    for (const LevelCell& cell : cells) w.push_back(cell.symbol);
    return w;
}

bool LevelConfig::has_active_nonterminal(const Cfg& core) const {
    for (const LevelCell& cell : cells)
        if (!cell.frozen && core.is_var(cell.symbol)) return true;
    return false;
}

std::vector<LevelConfig> tc_step(const LevelConfig& c, const Cfg& core) {
    Sites sites = collect_sites(c, core);
    if (sites.cell_index.empty())
        throw ValidationError("tc_step: the configuration has no active nonterminal (it is a final level)");
    if (sites.stuck) return {};

    std::vector<LevelConfig> out;
    std::vector<std::size_t> pick(sites.cell_index.size(), 0);
    for (;;) {
        out.push_back(apply_choices(c, sites, pick));
        // Advance the rightmost site first, so successors come out in
        // lexicographic choice order.
        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            if (++pick[i] < sites.options[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

namespace {

struct Node {
    LevelConfig config;
    DerivationTrace trace;
};

// Successor generation for one frontier node. The Cartesian choice space is
// walked site by site with the control automaton threaded through the chosen
// bodies: the successor's level word is exactly the concatenation of the
// chosen bodies, so a branch whose control state can no longer reach an
// accepting state is dead — unless no nonterminal has been chosen yet, in
// which case the branch may still complete to an all-terminal (final)
// successor, which the control never reads.
struct Generator {
    const Cfg& core;
    const Dfa& control;
    const std::vector<bool>& alive;  // control states with an accepting state reachable
    std::size_t max_len;

    Generator(const Cfg& core, const Dfa& control, const std::vector<bool>& alive, std::size_t max_len)
        : core(core), control(control), alive(alive), max_len(max_len) {}

    const LevelConfig* parent = nullptr;
    Sites sites;
    std::vector<std::size_t> suffix_min;  // least total body length of sites i..end
    std::size_t kept = 0;                 // cells the step carries over unchanged
    std::vector<std::size_t> pick;

    std::vector<std::pair<LevelConfig, std::vector<TraceStep>>> expandable;
    std::vector<std::pair<LevelConfig, std::vector<TraceStep>>> finals;

    bool prepare(const LevelConfig& c) {
        parent = &c;
        sites = collect_sites(c, core);
        expandable.clear();
        finals.clear();
        if (sites.stuck) return false;
        kept = c.cells.size() - sites.cell_index.size();
        suffix_min.assign(sites.cell_index.size() + 1, 0);
        for (std::size_t i = sites.cell_index.size(); i-- > 0;) {
            std::size_t least = SIZE_MAX;
            for (const CfgRule* r : sites.options[i]) least = std::min(least, r->body.size());
            suffix_min[i] = suffix_min[i + 1] + least;
        }
        pick.assign(sites.cell_index.size(), 0);
        return true;
    }

    void run(const LevelConfig& c) {
        if (!prepare(c)) return;
        walk(0, control.start, false, kept);
    }

    void walk(std::size_t site, std::uint32_t q, bool any_nonterminal, std::size_t cells_so_far) {
        if (cells_so_far + suffix_min[site] > max_len) return;
        if (site == sites.cell_index.size()) {
            if (any_nonterminal && !control.accepting[q]) return;
            auto& sink = any_nonterminal ? expandable : finals;
            sink.emplace_back(apply_choices(*parent, sites, pick), steps_of(sites, pick));
            return;
        }
        for (std::size_t j = 0; j < sites.options[site].size(); ++j) {
            const CfgRule* r = sites.options[site][j];
            bool has_nonterminal = false;
            for (Symbol s : r->body)
                if (core.is_var(s)) has_nonterminal = true;
            bool any = any_nonterminal || has_nonterminal;
            std::uint32_t nq = control.run_from(q, r->body);
            // Dead control states are absorbing, so once a nonterminal is in
            // play the whole subtree is unreachable from an accepting run.
            if (any && !alive[nq]) continue;
            pick[site] = j;
            walk(site + 1, nq, any, cells_so_far + r->body.size());
        }
    }
};

}  // namespace

TcEnumeration tc_enumerate(const TcGrammar& g, std::size_t max_len, const TcEnumerateOptions& opts) {
    g.validate();
    const Cfg& core = g.core;
    std::vector<bool> alive = coreachable_states(g.control, 0);

    std::set<std::vector<LevelCell>> visited;
    std::map<Word, DerivationTrace> found;
    std::uint32_t levels = 0;

    Node root{LevelConfig{{{core.start, false}}, 0}, {}};
    visited.insert(root.config.cells);
    levels = 1;

    std::vector<Node> frontier;
    if (g.control.accepts(root.config.active_projection())) frontier.push_back(std::move(root));

    while (!frontier.empty()) {
        struct Out {
            std::vector<std::pair<LevelConfig, std::vector<TraceStep>>> expandable;
            std::vector<std::pair<LevelConfig, std::vector<TraceStep>>> finals;
        };
        std::vector<Out> outs(frontier.size());

        auto generate = [&](std::size_t i) {
            if (frontier[i].config.depth >= opts.max_depth) return;
            Generator gen{core, g.control, alive, max_len};
            gen.run(frontier[i].config);
            outs[i].expandable = std::move(gen.expandable);
            outs[i].finals = std::move(gen.finals);
        };
        if (opts.exec == Exec::parallel) {
            std::int64_t count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t i = 0; i < count; ++i) generate(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = 0; i < frontier.size(); ++i) generate(i);
        }

        // Merge in frontier order: visited insertion and first-trace-wins are
        // then independent of the generation schedule.
        std::vector<Node> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const DerivationTrace& base = frontier[i].trace;
            for (auto& [config, steps] : outs[i].finals) {
                if (!visited.insert(config.cells).second) continue;
                levels = std::max(levels, config.depth + 1);
                DerivationTrace t = base;
                t.levels.push_back(std::move(steps));
                found.emplace(config.full_form(), std::move(t));
            }
            for (auto& [config, steps] : outs[i].expandable) {
                if (!visited.insert(config.cells).second) continue;
                levels = std::max(levels, config.depth + 1);
                Node kid{std::move(config), base};
                kid.trace.levels.push_back(std::move(steps));
                next.push_back(std::move(kid));
            }
        }
        frontier = std::move(next);
    }

    TcEnumeration out;
    out.stats.configs = visited.size();
    out.stats.levels = levels;
    std::vector<std::pair<Word, DerivationTrace>> pairs(found.begin(), found.end());
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        return word_less(a.first, b.first, core.terminals);
    });
    for (auto& [w, t] : pairs) {
        out.words.push_back(std::move(w));
        out.traces.push_back(std::move(t));
    }
    return out;
}

CertifyResult tc_certify(const TcGrammar& g, const DerivationTrace& t) {
    auto fail = [](std::string msg) { return CertifyResult{false, std::move(msg), {}}; };
    std::vector<std::string> violations = validate_tc(g);
    if (!violations.empty()) return fail("grammar: " + violations.front());
    const Cfg& core = g.core;

    LevelConfig c{{{core.start, false}}, 0};
    for (std::size_t lvl = 0; lvl < t.levels.size(); ++lvl) {
        const std::vector<TraceStep>& steps = t.levels[lvl];
        std::string at = "level " + std::to_string(lvl + 1);
        Sites sites = collect_sites(c, core);
        if (sites.cell_index.empty()) return fail(at + " rewrites a configuration with no active nonterminal");

        Word lw = c.active_projection();
        if (!g.control.accepts(lw))
            return fail(at + ": level word '" + word_str(lw) + "' is rejected by the control");

        if (steps.size() != sites.cell_index.size())
            return fail(at + " rewrites " + std::to_string(steps.size()) + " cells but " +
                        std::to_string(sites.cell_index.size()) + " nonterminals are active");
        std::vector<std::size_t> pick(steps.size());
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const TraceStep& s = steps[i];
            if (s.position != sites.cell_index[i])
                return fail(at + ", step " + std::to_string(i + 1) + ": position " +
                            std::to_string(s.position) + " does not point at the next active nonterminal (cell " +
                            std::to_string(sites.cell_index[i]) + ")");
            Symbol held = c.cells[s.position].symbol;
            if (s.nonterminal != held)
                return fail(at + ", step " + std::to_string(i + 1) + ": cell " + std::to_string(s.position) +
                            " holds " + held.name() + ", not " + s.nonterminal.name());
            const std::vector<const CfgRule*>& options = sites.options[i];
            std::size_t j = 0;
            while (j < options.size() && options[j]->body != s.body) ++j;
            if (j == options.size())
                return fail(at + ", step " + std::to_string(i + 1) + ": the grammar has no rule " +
                            print_cfg_rule({s.nonterminal, s.body}));
            pick[i] = j;
        }

        LevelConfig next = apply_choices(c, sites, pick);
        bool root_erasure = c.cells.size() == 1 && next.cells.empty();
        if (next.cells.size() < c.cells.size() && !root_erasure)
            return fail(at + ": the frontier shrank from " + std::to_string(c.cells.size()) + " to " +
                        std::to_string(next.cells.size()) + " cells");
        c = std::move(next);
    }

    if (c.has_active_nonterminal(core)) {
        Word lw = c.active_projection();
        return fail("the derivation stops with nonterminals still active: '" + word_str(lw) + "'");
    }
    return {true, "", c.full_form()};
}

}  // namespace tcw
