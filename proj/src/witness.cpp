#include "tcw/witness.hpp"

#include <string>
#include <utility>
#include <vector>

#include "tcw/errors.hpp"
#include "tcw/ops.hpp"
#include "tcw/regex.hpp"
#include "tcw/rlg.hpp"

namespace tcw {

namespace {

std::string u(std::uint32_t v) { return std::to_string(v); }

// Alphabet a1 .. an.
Alphabet letters(std::uint32_t n) {
    std::string names;
    for (std::uint32_t i = 1; i <= n; ++i) {
        if (!names.empty()) names += ' ';
        names += "a" + u(i);
    }
    return Alphabet::parse(names);
}

Symbol letter(std::uint32_t i) { return Symbol::intern("a" + u(i)); }

std::string window_set(const std::vector<Word>& windows) {
    std::string s = "{";
    for (std::size_t i = 0; i < windows.size(); ++i) {
        s += i ? ", " : "";
        s += word_str(windows[i]);
    }
    s += "}";
    return s;
}

std::string slt_text(const SltDescription& d) {
    return "width " + u(d.k) + ", prefixes " + window_set(d.prefix_windows) + ", interiors " +
           window_set(d.interior_windows) + ", suffixes " + window_set(d.suffix_windows) +
           ", shorts " + window_set(d.short_words);
}

std::string grammar_text(const RightLinearGrammar& g) {
    std::string s;
    for (const RlgRule& r : g.rules) {
        if (!s.empty()) s += "; ";
        s += print_rlg_rule(r);
    }
    return s;
}

WitnessSource regex_source(const Regex& r, const Alphabet& v) {
    return {"regex", print_regex(r), regex_compile(r, v)};
}

WitnessSource slt_source(const SltDescription& d) {
    return {"slt", slt_text(d), slt_to_dfa(d, SltMethod::window)};
}

WitnessSource grammar_source(const RightLinearGrammar& g) {
    return {"grammar", grammar_text(g), rlg_compile(g)};
}

RightLinearGrammar make_rlg(std::string_view vars, const Alphabet& terminals,
                            std::vector<RlgRule> rules) {
    RightLinearGrammar g;
    g.vars = Alphabet::parse(vars).symbols();
    g.terminals = terminals;
    g.start = g.vars[0];
    g.rules = std::move(rules);
    g.validate();
    return g;
}

WitnessClaim states_claim(std::uint32_t n, bool member) {
    return {"REG_" + u(n) + "^Z", member, ClaimMethod::state_complexity, n, std::nullopt};
}

WitnessClaim slt_yes_claim(std::uint32_t k) {
    return {"SLT_" + u(k), true, ClaimMethod::slt_certificate, k, std::nullopt};
}

// Family "SLT_n" refuses the single width n (and with it every smaller one);
// the bare family "SLT" is refused up to the fixed width ceiling.
WitnessClaim slt_no_claim(std::optional<std::uint32_t> k) {
    constexpr std::uint32_t kWidthCeiling = 4;
    if (k) return {"SLT_" + u(*k), false, ClaimMethod::slt_refutation, *k, std::nullopt};
    return {"SLT", false, ClaimMethod::slt_refutation, kWidthCeiling, std::nullopt};
}

WitnessClaim search_claim(const std::string& family, bool member, SearchBudget budget) {
    return {family, member, ClaimMethod::grammar_search, 0, budget};
}

void check_range(const std::string& id, std::optional<std::uint32_t> n) {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> range = witness_range(id);
    if (!range) {
        if (n)
            throw ValidationError("witness " + id + " does not take a parameter");
        return;
    }
    if (!n) throw ValidationError("witness " + id + " needs its parameter n");
    if (*n < range->first || *n > range->second)
        throw ValidationError("witness " + id + " supports n between " + u(range->first) +
                              " and " + u(range->second) + ", got " + u(*n));
}

WitnessCase case_l1() {
    WitnessCase c;
    c.id = "l-l1";
    c.language = "{a}* {b} {a, b}*";
    Alphabet ab = Alphabet::parse("a b");
    c.sources.push_back(regex_source(parse_regex("a* b (a | b)*", ab), ab));
    c.sources.push_back(grammar_source(make_rlg(
        "S A", ab,
        {{Symbol::intern("S"), make_word({"a"}), Symbol::intern("S")},
         {Symbol::intern("S"), make_word({"b"}), Symbol::intern("A")},
         {Symbol::intern("S"), make_word({"b"}), std::nullopt},
         {Symbol::intern("A"), make_word({"a"}), Symbol::intern("A")},
         {Symbol::intern("A"), make_word({"b"}), Symbol::intern("A")},
         {Symbol::intern("A"), make_word({"a"}), std::nullopt},
         {Symbol::intern("A"), make_word({"b"}), std::nullopt}})));
    c.claims = {states_claim(2, true), slt_no_claim(std::nullopt)};
    return c;
}

WitnessCase case_l2() {
    WitnessCase c;
    c.id = "l-l2";
    Alphabet abc = Alphabet::parse("a b c");
    SltDescription d = make_slt(1, abc, {make_word({"a"}), make_word({"b"})},
                                {make_word({"b"}), make_word({"c"})},
                                {make_word({"a"}), make_word({"c"})}, {});
    c.language = slt_text(d);
    c.stated_slt = d;
    c.sources.push_back(slt_source(d));
    c.sources.push_back(regex_source(parse_regex("a | (a | b) (b | c)* (a | c)", abc), abc));
    c.claims = {slt_yes_claim(1), states_claim(4, false)};
    return c;
}

WitnessCase case_l3(std::uint32_t n) {
    WitnessCase c;
    c.id = "l-l3";
    c.n = n;
    Alphabet v = letters(n - 1);
    Word w;
    for (std::uint32_t i = 1; i < n; ++i) w.push_back(letter(i));
    c.language = "{" + word_str(w) + "}";
    SltDescription d;
    if (n == 2) {
        d = make_slt(2, v, {}, {}, {}, {w});
    } else {
        std::vector<Word> interiors;
        for (std::uint32_t p = 2; p + 3 <= n; ++p) interiors.push_back({letter(p), letter(p + 1)});
        d = make_slt(2, v, {{letter(1), letter(2)}}, std::move(interiors),
                     {{letter(n - 2), letter(n - 1)}}, {});
    }
    c.stated_slt = d;
    c.sources.push_back(regex_source(Regex::word(w), v));
    c.sources.push_back(slt_source(d));
    c.claims = {slt_yes_claim(2), states_claim(n, false)};
    return c;
}

WitnessCase case_l4(std::uint32_t n) {
    WitnessCase c;
    c.id = "l-l4";
    c.n = n;
    Alphabet a = Alphabet::parse("a");
    Word w(n, Symbol::intern("a"));
    c.language = "{" + word_str(w) + "}";
    c.sources.push_back(regex_source(Regex::word(w), a));
    c.sources.push_back(grammar_source(make_rlg("S", a, {{Symbol::intern("S"), w, std::nullopt}})));
    c.claims = {search_claim("RL_1^P", true, {1, 1, n}), slt_no_claim(n)};
    return c;
}

WitnessCase case_l5(std::uint32_t n) {
    WitnessCase c;
    c.id = "l-l5";
    c.n = n;
    Alphabet v = letters(n);
    std::string joined;
    std::vector<Regex> lits;
    std::vector<Word> singles;
    for (std::uint32_t i = 1; i <= n; ++i) {
        joined += (i > 1 ? ", " : "") + letter(i).name();
        lits.push_back(Regex::literal(letter(i)));
        singles.push_back({letter(i)});
    }
    c.language = "{" + joined + "}*";
    Regex all = n == 1 ? std::move(lits[0]) : Regex::alt(std::move(lits));
    SltDescription d = make_slt(1, v, singles, singles, singles, {Word{}});
    c.stated_slt = d;
    c.sources.push_back(regex_source(Regex::star(std::move(all)), v));
    c.sources.push_back(slt_source(d));
    c.claims = {slt_yes_claim(1), search_claim("RL_" + u(n) + "^P", false, {n, n, 3})};
    return c;
}

WitnessCase case_l6() {
    WitnessCase c;
    c.id = "l-l6";
    c.language = "{a}";
    Alphabet a = Alphabet::parse("a");
    c.sources.push_back(regex_source(parse_regex("a", a), a));
    c.sources.push_back(
        grammar_source(make_rlg("S", a, {{Symbol::intern("S"), make_word({"a"}), std::nullopt}})));
    c.claims = {search_claim("RL_1^V", true, {1, 1, 1}), slt_no_claim(1)};
    return c;
}

WitnessCase case_l7() {
    WitnessCase c;
    c.id = "l-l7";
    c.language = "{a} {b}* {a} | {a}";
    Alphabet ab = Alphabet::parse("a b");
    SltDescription d =
        make_slt(1, ab, {make_word({"a"})}, {make_word({"b"})}, {make_word({"a"})}, {});
    c.stated_slt = d;
    c.sources.push_back(regex_source(parse_regex("a b* a | a", ab), ab));
    c.sources.push_back(slt_source(d));
    c.claims = {slt_yes_claim(1), search_claim("RL_1^V", false, {1, 6, 4})};
    return c;
}

WitnessCase case_l8() {
    WitnessCase c;
    c.id = "l-l8";
    c.language = "{a^(3m) : m >= 1}";
    Alphabet a = Alphabet::parse("a");
    c.sources.push_back(regex_source(parse_regex("a a a (a a a)*", a), a));
    Word aaa = make_word({"a", "a", "a"});
    c.sources.push_back(grammar_source(make_rlg("S", a,
                                                {{Symbol::intern("S"), aaa, Symbol::intern("S")},
                                                 {Symbol::intern("S"), aaa, std::nullopt}})));
    c.claims = {search_claim("RL_1^V", true, {1, 2, 3}), slt_no_claim(std::nullopt)};
    return c;
}

WitnessCase case_l9(std::uint32_t n) {
    WitnessCase c;
    c.id = "l-l9";
    c.n = n;
    Alphabet v = letters(n + 1);
    std::string lang;
    std::vector<Regex> pieces;
    for (std::uint32_t i = 1; i <= n + 1; ++i) {
        lang += "{" + letter(i).name() + "}+" + (i <= n ? " " : "");
        std::vector<Regex> pair;
        pair.push_back(Regex::literal(letter(i)));
        pair.push_back(Regex::star(Regex::literal(letter(i))));
        pieces.push_back(Regex::concat(std::move(pair)));
    }
    c.language = lang;
    std::vector<Word> interiors;
    for (std::uint32_t p = 1; p <= n + 1; ++p) interiors.push_back({letter(p), letter(p)});
    for (std::uint32_t p = 1; p <= n; ++p) interiors.push_back({letter(p), letter(p + 1)});
    SltDescription d = make_slt(2, v, {{letter(1), letter(1)}, {letter(1), letter(2)}},
                                std::move(interiors),
                                {{letter(n), letter(n + 1)}, {letter(n + 1), letter(n + 1)}}, {});
    c.stated_slt = d;
    c.sources.push_back(regex_source(Regex::concat(std::move(pieces)), v));
    c.sources.push_back(slt_source(d));
    // Refutation budgets trade breadth for tractability as the alphabet and
    // the variable allowance grow; each one is complete for its own bounds.
    static const SearchBudget kBudgets[] = {{1, 4, 2}, {2, 6, 2}, {3, 8, 2}, {4, 8, 1}};
    c.claims = {slt_yes_claim(2), search_claim("RL_" + u(n) + "^V", false, kBudgets[n - 1])};
    return c;
}

std::string budget_str(const SearchBudget& b) {
    return "vars " + u(b.max_vars) + ", prods " + u(b.max_prods) + ", rhs " + u(b.max_rhs_len);
}

std::string claim_bound_str(const WitnessClaim& c) {
    switch (c.method) {
        case ClaimMethod::state_complexity:
            return "states <= " + u(c.bound);
        case ClaimMethod::slt_certificate:
            return "width " + u(c.bound);
        case ClaimMethod::slt_refutation:
            return "width <= " + u(c.bound);
        case ClaimMethod::grammar_search:
            return budget_str(*c.budget);
    }
    return {};
}

ClaimVerdict run_claim(const WitnessCase& subject, const WitnessClaim& claim, Exec exec) {
    ClaimVerdict v;
    v.claim = claim;
    switch (claim.method) {
        case ClaimMethod::state_complexity: {
            std::size_t sc = state_complexity(subject.canonical);
            bool within = sc <= claim.bound;
            v.verified = within == claim.member;
            v.evidence = "state complexity " + u(static_cast<std::uint32_t>(sc)) +
                         (within ? " is within " : " exceeds ") + u(claim.bound);
            break;
        }
        case ClaimMethod::slt_certificate: {
            SltDecision dec = is_slt_k(subject.canonical, claim.bound, exec);
            if (!dec.is_slt) {
                v.verified = false;
                v.evidence = "no width-" + u(claim.bound) +
                             " description; the least candidate admits the non-member \"" +
                             word_str(*dec.counterexample) + "\"";
                break;
            }
            if (subject.stated_slt) {
                v.verified = *dec.description == *subject.stated_slt;
                v.evidence = "width-" + u(claim.bound) + " certificate " +
                             (v.verified ? "equals" : "differs from") + " the stated windows";
            } else {
                v.verified = true;
                v.evidence = "width-" + u(claim.bound) + " certificate found";
            }
            break;
        }
        case ClaimMethod::slt_refutation: {
            v.verified = true;
            for (std::uint32_t k = 1; k <= claim.bound; ++k) {
                SltDecision dec = is_slt_k(subject.canonical, k, exec);
                if (dec.is_slt) {
                    v.verified = false;
                    v.evidence = "a width-" + u(k) + " description exists";
                    break;
                }
                if (k == claim.bound)
                    v.evidence = "no description of width up to " + u(claim.bound) +
                                 "; the width-" + u(k) +
                                 " candidate admits the non-member \"" +
                                 word_str(*dec.counterexample) + "\"";
            }
            break;
        }
        case ClaimMethod::grammar_search: {
            SearchOptions opts;
            opts.exec = exec;
            SearchResult r = search_rlg(subject.canonical, *claim.budget, opts);
            v.verified = r.grammar.has_value() == claim.member;
            v.evidence = r.grammar ? "grammar found: " + grammar_text(*r.grammar)
                                   : "no grammar within the budget";
            break;
        }
    }
    return v;
}

}  // namespace

WitnessCase build_witness(const std::string& id, std::optional<std::uint32_t> n) {
    check_range(id, n);
    WitnessCase c;
    if (id == "l-l1") c = case_l1();
    else if (id == "l-l2") c = case_l2();
    else if (id == "l-l3") c = case_l3(*n);
    else if (id == "l-l4") c = case_l4(*n);
    else if (id == "l-l5") c = case_l5(*n);
    else if (id == "l-l6") c = case_l6();
    else if (id == "l-l7") c = case_l7();
    else if (id == "l-l8") c = case_l8();
    else if (id == "l-l9") c = case_l9(*n);
    c.canonical = minimize_canonical(c.sources.front().dfa);
    return c;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_range(const std::string& id) {
    if (id == "l-l1" || id == "l-l2" || id == "l-l6" || id == "l-l7" || id == "l-l8")
        return std::nullopt;
    if (id == "l-l3") return std::pair<std::uint32_t, std::uint32_t>{2, 6};
    if (id == "l-l4") return std::pair<std::uint32_t, std::uint32_t>{1, 6};
    if (id == "l-l5") return std::pair<std::uint32_t, std::uint32_t>{1, 6};
    if (id == "l-l9") return std::pair<std::uint32_t, std::uint32_t>{1, 4};
    throw ValidationError("unknown witness id '" + id + "'; expected l-l1 through l-l9");
}

std::vector<WitnessCase> default_witness_cases() {
    std::vector<WitnessCase> cases;
    cases.push_back(build_witness("l-l1"));
    cases.push_back(build_witness("l-l2"));
    for (std::uint32_t n = 2; n <= 6; ++n) cases.push_back(build_witness("l-l3", n));
    for (std::uint32_t n = 1; n <= 4; ++n) cases.push_back(build_witness("l-l4", n));
    for (std::uint32_t n = 1; n <= 4; ++n) cases.push_back(build_witness("l-l5", n));
    cases.push_back(build_witness("l-l6"));
    cases.push_back(build_witness("l-l7"));
    cases.push_back(build_witness("l-l8"));
    for (std::uint32_t n = 1; n <= 4; ++n) cases.push_back(build_witness("l-l9", n));
    return cases;
}

WitnessReport verify_witness(const WitnessCase& subject, Exec exec) {
    WitnessReport rep;
    rep.subject = subject;
    rep.sources_agree = true;
    for (const WitnessSource& src : subject.sources)
        if (!equivalent(src.dfa, subject.canonical).equal) rep.sources_agree = false;
    for (const WitnessClaim& claim : subject.claims)
        rep.verdicts.push_back(run_claim(subject, claim, exec));
    rep.green = rep.sources_agree;
    for (const ClaimVerdict& v : rep.verdicts) rep.green = rep.green && v.verified;
    return rep;
}

std::string witness_instance_name(const WitnessCase& subject) {
    return subject.n ? subject.id + " n=" + u(*subject.n) : subject.id;
}

std::string witness_report_text(const WitnessReport& report) {
    const WitnessCase& c = report.subject;
    std::string s = "witness " + witness_instance_name(c) + "\n";
    s += "language " + c.language + "\n";
    for (const WitnessSource& src : c.sources) s += "source " + src.kind + ": " + src.text + "\n";
    s += std::string("sources agree: ") + (report.sources_agree ? "yes" : "NO") + "\n";
    for (const ClaimVerdict& v : report.verdicts) {
        s += "claim " + v.claim.family + (v.claim.member ? " yes" : " no") + " [" +
             claim_bound_str(v.claim) + "]: " + (v.verified ? "verified" : "FAILED") + " (" +
             v.evidence + ")\n";
    }
    s += std::string("result: ") + (report.green ? "green" : "red") + "\n";
    return s;
}

}  // namespace tcw
