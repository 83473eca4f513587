#include "tcw/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tcw/errors.hpp"
#include "tcw/ops.hpp"

namespace tcw {

namespace {

// Names that survive the line format: no whitespace (already guaranteed by the
// symbol interner), no ':' (would read as a key), no '%' prefix (reserved).
void check_format_name(const std::string& name) {
    if (name.find(':') != std::string::npos || name.front() == '%')
        throw ValidationError("symbol name '" + name + "' clashes with document syntax");
}

void check_header(const Doc& doc, std::string_view kind) {
    if (need_scalar(doc.entries, "format") != "1") throw ValidationError("unsupported format version");
    std::string k = need_scalar(doc.entries, "kind");
    if (k != kind) throw ValidationError("expected kind '" + std::string(kind) + "', found '" + k + "'");
}

void push_header(Doc& doc, const char* kind) {
    doc.entries.push_back({"format", true, "1", {}, {}});
    doc.entries.push_back({"kind", true, std::string(kind), {}, {}});
}

void push_scalar(std::vector<DocEntry>& entries, const char* key, std::string value) {
    entries.push_back({key, true, std::move(value), {}, {}});
}

void push_items(std::vector<DocEntry>& entries, const char* key, std::vector<std::string> items) {
    entries.push_back({key, false, "", std::move(items), {}});
}

// "accepting:" with nothing behind it is an empty index list.
std::vector<std::uint32_t> index_list(const std::vector<DocEntry>& entries, std::string_view key) {
    const DocEntry& e = need_entry(entries, key);
    if (!e.children.empty() || !e.items.empty())
        throw ValidationError("field '" + std::string(key) + "' must be a single line");
    if (!e.has_value) return {};
    return parse_u32_list(e.value, std::string(key) + " entry");
}

std::string index_line(const std::vector<bool>& flags) {
    std::string out;
    for (std::size_t q = 0; q < flags.size(); ++q) {
        if (!flags[q]) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(q);
    }
    return out;
}

Symbol symbol_in(const std::string& name, const Alphabet& v, std::string_view where) {
    Symbol s = Symbol::intern(name);
    if (!v.contains(s))
        throw ValidationError("symbol '" + name + "' in " + std::string(where) + " is not in the alphabet");
    return s;
}

std::uint32_t state_in(const std::string& text, std::uint32_t states, std::string_view where) {
    std::uint32_t q = parse_u32(text, where);
    if (q >= states) throw ValidationError("state " + text + " in " + std::string(where) + " is out of range");
    return q;
}

}  // namespace

std::string doc_kind(const Doc& doc) {
    if (need_scalar(doc.entries, "format") != "1") throw ValidationError("unsupported format version");
    return need_scalar(doc.entries, "kind");
}

Alphabet alphabet_from_scalar(const std::string& text) {
    std::vector<std::string> names = split_fields(text);
    if (names.empty()) throw ValidationError("alphabet must be nonempty");
    for (const std::string& n : names) check_format_name(n);
    std::vector<Symbol> syms;
    syms.reserve(names.size());
    for (const std::string& n : names) syms.push_back(Symbol::intern(n));
    return Alphabet(std::move(syms));
}

Doc dfa_to_doc(const Dfa& d) {
    Doc doc;
    push_header(doc, "dfa");
    push_scalar(doc.entries, "alphabet", d.alphabet.str());
    push_scalar(doc.entries, "states", std::to_string(d.state_count));
    push_scalar(doc.entries, "start", std::to_string(d.start));
    push_scalar(doc.entries, "accepting", index_line(d.accepting));
    std::vector<std::string> rows;
    for (std::uint32_t q = 0; q < d.state_count; ++q)
        for (std::uint32_t a = 0; a < d.alphabet.size(); ++a)
            rows.push_back(std::to_string(q) + " " + d.alphabet.at(a).name() + " " + std::to_string(d.next[q * d.alphabet.size() + a]));
    push_items(doc.entries, "delta", std::move(rows));
    // An empty accepting set prints as a bare "accepting:" line.
    for (DocEntry& e : doc.entries)
        if (e.has_value && e.value.empty()) e.has_value = false;
    return doc;
}

Dfa dfa_from_doc(const Doc& doc) {
    check_header(doc, "dfa");
    Dfa d;
    d.alphabet = alphabet_from_scalar(need_scalar(doc.entries, "alphabet"));
    d.state_count = parse_u32(need_scalar(doc.entries, "states"), "state count");
    if (d.state_count == 0) throw ValidationError("a dfa needs at least one state");
    d.start = state_in(need_scalar(doc.entries, "start"), d.state_count, "start");
    d.accepting.assign(d.state_count, false);
    for (std::uint32_t q : index_list(doc.entries, "accepting")) {
        if (q >= d.state_count) throw ValidationError("accepting state " + std::to_string(q) + " is out of range");
        d.accepting[q] = true;
    }
    d.next.assign(std::size_t(d.state_count) * d.alphabet.size(), 0);
    std::vector<bool> seen(d.next.size(), false);
    for (const std::string& row : need_items(doc.entries, "delta")) {
        std::vector<std::string> f = split_fields(row);
        if (f.size() != 3) throw ValidationError("delta row '" + row + "' needs 'state symbol state'");
        std::uint32_t q = state_in(f[0], d.state_count, "delta");
        std::uint32_t a = *d.alphabet.index_of(symbol_in(f[1], d.alphabet, "delta"));
        std::uint32_t t = state_in(f[2], d.state_count, "delta");
        std::size_t cell = std::size_t(q) * d.alphabet.size() + a;
        if (seen[cell]) throw ValidationError("duplicate delta row for state " + f[0] + " on " + f[1]);
        seen[cell] = true;
        d.next[cell] = t;
    }
    for (std::size_t cell = 0; cell < seen.size(); ++cell)
        if (!seen[cell])
            throw ValidationError("delta is missing state " + std::to_string(cell / d.alphabet.size()) + " on " +
                                  d.alphabet.at(cell % d.alphabet.size()).name());
    d.validate();
    return d;
}

Doc nfa_to_doc(const Nfa& n) {
    Doc doc;
    push_header(doc, "nfa");
    push_scalar(doc.entries, "alphabet", n.alphabet.str());
    push_scalar(doc.entries, "states", std::to_string(n.state_count));
    std::vector<bool> start_flags(n.state_count, false);
    for (std::uint32_t q : n.starts) start_flags[q] = true;
    push_scalar(doc.entries, "starts", index_line(start_flags));
    push_scalar(doc.entries, "accepting", index_line(n.accepting));
    std::vector<std::string> rows;
    for (std::uint32_t q = 0; q < n.state_count; ++q)
        for (std::uint32_t a = 0; a < n.alphabet.size(); ++a) {
            std::vector<std::uint32_t> ts = n.moves[q][a];
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            for (std::uint32_t t : ts) rows.push_back(std::to_string(q) + " " + n.alphabet.at(a).name() + " " + std::to_string(t));
        }
    push_items(doc.entries, "moves", std::move(rows));
    std::vector<std::string> eps_rows;
    for (std::uint32_t q = 0; q < n.state_count; ++q) {
        std::vector<std::uint32_t> ts = n.eps[q];
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (std::uint32_t t : ts) eps_rows.push_back(std::to_string(q) + " " + std::to_string(t));
    }
    push_items(doc.entries, "eps", std::move(eps_rows));
    for (DocEntry& e : doc.entries)
        if (e.has_value && e.value.empty()) e.has_value = false;
    return doc;
}

Nfa nfa_from_doc(const Doc& doc) {
    check_header(doc, "nfa");
    Nfa n = nfa_blank(alphabet_from_scalar(need_scalar(doc.entries, "alphabet")));
    std::uint32_t states = parse_u32(need_scalar(doc.entries, "states"), "state count");
    for (std::uint32_t q = 0; q < states; ++q) n.add_state(false);
    for (std::uint32_t q : index_list(doc.entries, "starts")) {
        if (q >= states) throw ValidationError("start state " + std::to_string(q) + " is out of range");
        n.starts.push_back(q);
    }
    for (std::uint32_t q : index_list(doc.entries, "accepting")) {
        if (q >= states) throw ValidationError("accepting state " + std::to_string(q) + " is out of range");
        n.accepting[q] = true;
    }
    for (const std::string& row : need_items(doc.entries, "moves")) {
        std::vector<std::string> f = split_fields(row);
        if (f.size() != 3) throw ValidationError("moves row '" + row + "' needs 'state symbol state'");
        n.add_move(state_in(f[0], states, "moves"), *n.alphabet.index_of(symbol_in(f[1], n.alphabet, "moves")),
                   state_in(f[2], states, "moves"));
    }
    for (const std::string& row : need_items(doc.entries, "eps")) {
        std::vector<std::string> f = split_fields(row);
        if (f.size() != 2) throw ValidationError("eps row '" + row + "' needs 'state state'");
        n.add_eps(state_in(f[0], states, "eps"), state_in(f[1], states, "eps"));
    }
    n.validate();
    return n;
}

Doc rlg_to_doc(const RightLinearGrammar& g) {
    Doc doc;
    push_header(doc, "rlg");
    push_scalar(doc.entries, "alphabet", g.terminals.str());
    std::string vars;
    for (Symbol v : g.vars) {
        if (!vars.empty()) vars += ' ';
        vars += v.name();
    }
    push_scalar(doc.entries, "vars", std::move(vars));
    push_scalar(doc.entries, "start", g.start.name());
    std::vector<std::string> rows;
    for (const RlgRule& r : g.rules) rows.push_back(print_rlg_rule(r));
    push_items(doc.entries, "rules", std::move(rows));
    return doc;
}

RightLinearGrammar rlg_from_doc(const Doc& doc) {
    check_header(doc, "rlg");
    RightLinearGrammar g;
    g.terminals = alphabet_from_scalar(need_scalar(doc.entries, "alphabet"));
    for (const std::string& name : split_fields(need_scalar(doc.entries, "vars"))) {
        check_format_name(name);
        g.vars.push_back(Symbol::intern(name));
    }
    g.start = Symbol::intern(need_scalar(doc.entries, "start"));
    auto is_var = [&](Symbol s) { return std::find(g.vars.begin(), g.vars.end(), s) != g.vars.end(); };
    for (const std::string& row : need_items(doc.entries, "rules")) {
        std::vector<std::string> f = split_fields(row);
        if (f.size() < 3 || f[1] != "->")
            throw ValidationError("rule '" + row + "' needs the shape 'A -> body'");
        RlgRule r;
        r.lhs = Symbol::intern(f[0]);
        for (std::size_t i = 2; i < f.size(); ++i) {
            if (f[i] == "%eps") {
                if (f.size() != 3) throw ValidationError("rule '" + row + "': %eps stands alone");
                break;
            }
            Symbol s = Symbol::intern(f[i]);
            if (is_var(s)) {
                if (i + 1 != f.size())
                    throw ValidationError("rule '" + row + "': a variable may only end the body");
                r.next = s;
            } else {
                r.body.push_back(s);
            }
        }
        g.rules.push_back(std::move(r));
    }
    g.validate();
    return g;
}

Doc regex_to_doc(const Regex& r, const Alphabet& v) {
    Doc doc;
    push_header(doc, "regex");
    push_scalar(doc.entries, "alphabet", v.str());
    push_scalar(doc.entries, "expr", print_regex(r));
    return doc;
}

std::pair<Regex, Alphabet> regex_from_doc(const Doc& doc) {
    check_header(doc, "regex");
    Alphabet v = alphabet_from_scalar(need_scalar(doc.entries, "alphabet"));
    Regex r = parse_regex(need_scalar(doc.entries, "expr"), v);
    return {std::move(r), std::move(v)};
}

namespace {

std::vector<std::string> word_lines(const std::vector<Word>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(word_str(w));
    return out;
}

std::vector<Word> words_from_items(const std::vector<DocEntry>& entries, const char* key, const Alphabet& v) {
    std::vector<Word> out;
    for (const std::string& line : need_items(entries, key)) out.push_back(parse_word_line(line, v));
    return out;
}

}  // namespace

Doc slt_to_doc(const SltDescription& desc) {
    SltDescription d = desc;
    d.normalize();
    Doc doc;
    push_header(doc, "slt");
    push_scalar(doc.entries, "alphabet", d.alphabet.str());
    push_scalar(doc.entries, "k", std::to_string(d.k));
    push_items(doc.entries, "prefix_windows", word_lines(d.prefix_windows));
    push_items(doc.entries, "interior_windows", word_lines(d.interior_windows));
    push_items(doc.entries, "suffix_windows", word_lines(d.suffix_windows));
    push_items(doc.entries, "short_words", word_lines(d.short_words));
    return doc;
}

SltDescription slt_from_doc(const Doc& doc) {
    check_header(doc, "slt");
    Alphabet v = alphabet_from_scalar(need_scalar(doc.entries, "alphabet"));
    std::uint32_t k = parse_u32(need_scalar(doc.entries, "k"), "window width");
    return make_slt(k, v, words_from_items(doc.entries, "prefix_windows", v),
                    words_from_items(doc.entries, "interior_windows", v),
                    words_from_items(doc.entries, "suffix_windows", v),
                    words_from_items(doc.entries, "short_words", v));
}

namespace {

std::string joined_names(const std::vector<Symbol>& symbols) {
    std::string line;
    for (Symbol s : symbols) {
        if (!line.empty()) line += ' ';
        line += s.name();
    }
    return line;
}

// The cfg fields are shared between standalone documents and the section a
// tc document embeds, so both codecs work on bare entry lists.
std::vector<DocEntry> cfg_entries(const Cfg& g) {
    std::vector<DocEntry> entries;
    push_scalar(entries, "alphabet", g.terminals.str());
    push_scalar(entries, "vars", joined_names(g.vars));
    push_scalar(entries, "start", g.start.name());
    std::vector<std::string> rows;
    for (const CfgRule& r : g.rules) rows.push_back(print_cfg_rule(r));
    push_items(entries, "rules", std::move(rows));
    return entries;
}

Cfg cfg_from_entries(const std::vector<DocEntry>& entries) {
    Cfg g;
    g.terminals = alphabet_from_scalar(need_scalar(entries, "alphabet"));
    for (const std::string& name : split_fields(need_scalar(entries, "vars"))) {
        check_format_name(name);
        g.vars.push_back(Symbol::intern(name));
    }
    g.start = Symbol::intern(need_scalar(entries, "start"));
    for (const std::string& row : need_items(entries, "rules")) {
        std::vector<std::string> f = split_fields(row);
        if (f.size() < 3 || f[1] != "->")
            throw ValidationError("rule '" + row + "' needs the shape 'A -> body'");
        CfgRule r;
        r.lhs = Symbol::intern(f[0]);
        for (std::size_t i = 2; i < f.size(); ++i) {
            if (f[i] == "%eps") {
                if (f.size() != 3) throw ValidationError("rule '" + row + "': %eps stands alone");
                break;
            }
            r.body.push_back(Symbol::intern(f[i]));
        }
        g.rules.push_back(std::move(r));
    }
    g.validate();
    return g;
}

// Serialization shared by the monotone and Kuroda kinds, which differ only
// in the validation applied after reading.
Doc rewriting_to_doc(const char* kind, const std::vector<Symbol>& vars, const Alphabet& terminals,
                     Symbol start, const std::vector<MonotoneRule>& rules) {
    Doc doc;
    push_header(doc, kind);
    push_scalar(doc.entries, "alphabet", terminals.str());
    push_scalar(doc.entries, "vars", joined_names(vars));
    push_scalar(doc.entries, "start", start.name());
    std::vector<std::string> rows;
    for (const MonotoneRule& r : rules) rows.push_back(print_monotone_rule(r));
    push_items(doc.entries, "rules", std::move(rows));
    return doc;
}

Word rule_side(const std::vector<std::string>& fields, std::size_t begin, std::size_t end,
               const std::string& row) {
    Word side;
    for (std::size_t i = begin; i < end; ++i) {
        if (fields[i] == "%eps") {
            if (end - begin != 1) throw ValidationError("rule '" + row + "': %eps stands alone");
            return {};
        }
        side.push_back(Symbol::intern(fields[i]));
    }
    return side;
}

MonotoneGrammar rewriting_from_doc(const Doc& doc, const char* kind) {
    check_header(doc, kind);
    MonotoneGrammar g;
    g.terminals = alphabet_from_scalar(need_scalar(doc.entries, "alphabet"));
    for (const std::string& name : split_fields(need_scalar(doc.entries, "vars"))) {
        check_format_name(name);
        g.vars.push_back(Symbol::intern(name));
    }
    g.start = Symbol::intern(need_scalar(doc.entries, "start"));
    for (const std::string& row : need_items(doc.entries, "rules")) {
        std::vector<std::string> f = split_fields(row);
        std::size_t arrow = f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == "->") {
                if (arrow != f.size())
                    throw ValidationError("rule '" + row + "' has more than one '->'");
                arrow = i;
            }
        if (arrow == 0 || arrow + 1 >= f.size())
            throw ValidationError("rule '" + row + "' needs the shape 'lhs -> rhs'");
        g.rules.push_back({rule_side(f, 0, arrow, row), rule_side(f, arrow + 1, f.size(), row)});
    }
    return g;
}

}  // namespace

Doc cfg_to_doc(const Cfg& g) {
    Doc doc;
    push_header(doc, "cfg");
    for (DocEntry& e : cfg_entries(g)) doc.entries.push_back(std::move(e));
    return doc;
}

Cfg cfg_from_doc(const Doc& doc) {
    check_header(doc, "cfg");
    return cfg_from_entries(doc.entries);
}

Doc monotone_to_doc(const MonotoneGrammar& g) {
    return rewriting_to_doc("monotone", g.vars, g.terminals, g.start, g.rules);
}

MonotoneGrammar monotone_from_doc(const Doc& doc) {
    MonotoneGrammar g = rewriting_from_doc(doc, "monotone");
    g.validate();
    return g;
}

Doc kuroda_to_doc(const KurodaGrammar& g) {
    return rewriting_to_doc("kuroda", g.vars, g.terminals, g.start, g.rules);
}

KurodaGrammar kuroda_from_doc(const Doc& doc) {
    MonotoneGrammar g = rewriting_from_doc(doc, "kuroda");
    KurodaGrammar k{std::move(g.vars), std::move(g.terminals), g.start, std::move(g.rules)};
    k.validate();
    return k;
}

Doc tc_to_doc(const TcGrammar& g) {
    g.validate();
    Doc doc;
    push_header(doc, "tc");
    doc.entries.push_back({"cfg", false, "", {}, cfg_entries(g.core)});
    Doc control = dfa_to_doc(g.control);
    std::vector<DocEntry> body;
    for (DocEntry& e : control.entries)
        if (e.key != "format") body.push_back(std::move(e));
    doc.entries.push_back({"control", false, "", {}, std::move(body)});
    return doc;
}

TcGrammar tc_from_doc(const Doc& doc) {
    check_header(doc, "tc");
    TcGrammar g;
    g.core = cfg_from_entries(need_entry(doc.entries, "cfg").children);
    Doc control;
    control.entries.push_back({"format", true, "1", {}, {}});
    for (const DocEntry& e : need_entry(doc.entries, "control").children) control.entries.push_back(e);
    g.control = compile_language_doc(control);
    g.validate();
    return g;
}

Doc classification_to_doc(const ClassificationReport& r) {
    auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
    auto opt = [](const std::optional<std::uint32_t>& v) {
        return v ? std::to_string(*v) : std::string("none");
    };
    auto joined = [](const std::vector<Symbol>& symbols) {
        std::string line;
        for (Symbol s : symbols) {
            if (!line.empty()) line += ' ';
            line += s.name();
        }
        return line;
    };

    Doc doc;
    push_header(doc, "report");
    push_scalar(doc.entries, "report", "classification");
    push_scalar(doc.entries, "alphabet", r.alphabet.str());
    push_scalar(doc.entries, "state_complexity", std::to_string(r.state_complexity));
    push_scalar(doc.entries, "k_max", std::to_string(r.k_max));
    push_scalar(doc.entries, "definite_k_max", std::to_string(r.definite_k_max));
    push_scalar(doc.entries, "mon_n_max", std::to_string(r.mon_n_max));

    push_scalar(doc.entries, "finite", yn(r.finite));
    if (r.finite) push_items(doc.entries, "members", word_lines(r.members));
    push_scalar(doc.entries, "nilpotent", yn(r.nilpotent));
    if (r.nilpotent && !r.finite) push_items(doc.entries, "co_members", word_lines(r.co_members));
    push_scalar(doc.entries, "monoidal", yn(r.monoidal));
    push_scalar(doc.entries, "mon_n", opt(r.mon_n));
    if (r.mon_n) {
        std::vector<std::string> rows;
        for (const std::vector<Symbol>& part : r.mon_parts) rows.push_back(joined(part));
        push_items(doc.entries, "mon_parts", std::move(rows));
    }
    push_scalar(doc.entries, "combinational", yn(r.combinational));
    if (r.combinational) {
        std::string line = joined(r.comb_letters);
        doc.entries.push_back({"comb_letters", !line.empty(), std::move(line), {}, {}});
    }
    push_scalar(doc.entries, "definite_k", opt(r.definite_k));
    if (r.definite_k) {
        push_items(doc.entries, "definite_words", word_lines(r.definite_words));
        push_items(doc.entries, "definite_suffixes", word_lines(r.definite_suffixes));
    }
    push_scalar(doc.entries, "suffix_closed", yn(r.suffix_closed));
    push_scalar(doc.entries, "slt_k", opt(r.slt_k));
    if (r.slt_description) {
        DocEntry e{"slt_windows", false, "", {}, {}};
        push_items(e.children, "prefix_windows", word_lines(r.slt_description->prefix_windows));
        push_items(e.children, "interior_windows",
                   word_lines(r.slt_description->interior_windows));
        push_items(e.children, "suffix_windows", word_lines(r.slt_description->suffix_windows));
        push_items(e.children, "short_words", word_lines(r.slt_description->short_words));
        doc.entries.push_back(std::move(e));
    }
    push_scalar(doc.entries, "var_rl_upper", std::to_string(r.var_rl_upper));
    push_scalar(doc.entries, "prod_rl_upper", std::to_string(r.prod_rl_upper));
    if (r.search) {
        push_scalar(doc.entries, "search_budget",
                    std::to_string(r.search->budget.max_vars) + ' ' +
                        std::to_string(r.search->budget.max_prods) + ' ' +
                        std::to_string(r.search->budget.max_rhs_len));
        push_scalar(doc.entries, "search_states", std::to_string(r.search->states));
        if (r.search->grammar) {
            std::vector<std::string> rows;
            for (const RlgRule& rule : r.search->grammar->rules)
                rows.push_back(print_rlg_rule(rule));
            push_items(doc.entries, "search_rules", std::move(rows));
        } else {
            push_scalar(doc.entries, "search_grammar", "none");
        }
    }
    return doc;
}

Dfa compile_language_doc(const Doc& doc) {
    std::string kind = doc_kind(doc);
    if (kind == "dfa") return dfa_from_doc(doc);
    if (kind == "nfa") return determinize_minimize(nfa_from_doc(doc));
    if (kind == "rlg") return rlg_compile(rlg_from_doc(doc));
    if (kind == "regex") {
        auto [r, v] = regex_from_doc(doc);
        return regex_compile(r, v);
    }
    if (kind == "slt") return slt_to_dfa(slt_from_doc(doc), SltMethod::window);
    throw ValidationError("kind '" + kind + "' does not describe a language");
}

Word parse_word_line(const std::string& line, const Alphabet& v) {
    std::vector<std::string> f = split_fields(line);
    if (f.size() == 1 && f[0] == "%eps") return {};
    Word w;
    for (const std::string& name : f) w.push_back(symbol_in(name, v, "word"));
    return w;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush()) throw Error("failed writing '" + path + "'");
}

}  // namespace tcw
