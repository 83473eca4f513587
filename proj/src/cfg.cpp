#include "tcw/cfg.hpp"

#include <algorithm>
#include <set>

#include "tcw/errors.hpp"

namespace tcw {

bool Cfg::is_var(Symbol s) const {
    return std::find(vars.begin(), vars.end(), s) != vars.end();
}

std::vector<const CfgRule*> Cfg::rules_for(Symbol lhs) const {
    std::vector<const CfgRule*> out;
    for (const CfgRule& r : rules)
        if (r.lhs == lhs) out.push_back(&r);
    return out;
}

std::string print_cfg_rule(const CfgRule& r) {
    std::string out = r.lhs.name() + " ->";
    if (r.body.empty()) return out + " %eps";
    for (Symbol s : r.body) out += " " + s.name();
    return out;
}

std::vector<std::string> cfg_violations(const Cfg& g) {
    std::vector<std::string> out;
    std::set<Symbol> var_set;
    for (Symbol v : g.vars) {
        if (!var_set.insert(v).second) out.push_back("duplicate variable " + v.name());
        if (g.terminals.contains(v)) out.push_back("variable " + v.name() + " is also a terminal");
    }
    if (!var_set.contains(g.start)) out.push_back("start symbol " + g.start.name() + " is not a variable");

    std::set<std::pair<Symbol, std::vector<Symbol>>> seen;
    bool start_on_rhs = false;
    for (const CfgRule& r : g.rules)
        for (Symbol s : r.body)
            if (s == g.start) start_on_rhs = true;
    for (const CfgRule& r : g.rules) {
        if (!var_set.contains(r.lhs))
            out.push_back("rule lhs " + r.lhs.name() + " is not a variable");
        for (Symbol s : r.body)
            if (!var_set.contains(s) && !g.terminals.contains(s))
                out.push_back("body symbol " + s.name() + " in '" + print_cfg_rule(r) +
                              "' is neither a variable nor a terminal");
        if (r.body.empty()) {
            if (r.lhs != g.start)
                out.push_back("erasing rule " + print_cfg_rule(r) + " (only the start symbol may erase)");
            else if (start_on_rhs)
                out.push_back("erasing rule " + print_cfg_rule(r) + " while " + g.start.name() +
                              " occurs on a right-hand side");
        }
        if (!seen.insert({r.lhs, r.body}).second)
            out.push_back("duplicate rule " + print_cfg_rule(r));
    }
    return out;
}

void Cfg::validate() const {
    std::vector<std::string> v = cfg_violations(*this);
    if (!v.empty()) throw ValidationError(v.front());
}

}  // namespace tcw
