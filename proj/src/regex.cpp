#include "tcw/regex.hpp"

#include <algorithm>

#include "tcw/errors.hpp"

namespace tcw {

Regex Regex::empty() { return Regex(Kind::empty); }

Regex Regex::literal(Symbol s) {
    Regex r(Kind::literal);
    r.lit_ = s;
    return r;
}

Regex Regex::concat(std::vector<Regex> parts) {
    if (parts.empty()) throw ValidationError("concat of zero parts");
    if (parts.size() == 1) return std::move(parts[0]);
    Regex r(Kind::concat);
    for (Regex& p : parts) {
        if (p.kind_ == Kind::concat)
            for (Regex& q : p.parts_) r.parts_.push_back(std::move(q));
        else
            r.parts_.push_back(std::move(p));
    }
    return r;
}

Regex Regex::alt(std::vector<Regex> parts) {
    if (parts.empty()) throw ValidationError("union of zero parts");
    if (parts.size() == 1) return std::move(parts[0]);
    Regex r(Kind::alt);
    for (Regex& p : parts) {
        if (p.kind_ == Kind::alt)
            for (Regex& q : p.parts_) r.parts_.push_back(std::move(q));
        else
            r.parts_.push_back(std::move(p));
    }
    return r;
}

Regex Regex::star(Regex inner) {
    Regex r(Kind::star);
    r.parts_.push_back(std::move(inner));
    return r;
}

Regex Regex::word(const Word& w) {
    if (w.empty()) return epsilon();
    std::vector<Regex> parts;
    for (Symbol s : w) parts.push_back(literal(s));
    return concat(std::move(parts));
}

bool Regex::union_free() const {
    if (kind_ == Kind::alt) return false;
    return std::all_of(parts_.begin(), parts_.end(), [](const Regex& p) { return p.union_free(); });
}

bool Regex::operator==(const Regex& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::literal) return lit_ == o.lit_;
    return parts_ == o.parts_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum class Type { sym, alt, star, dot, lparen, rparen, empty_lang, eps, end };
    Type type;
    Symbol sym;
    std::size_t line, col;
};

struct Lexer {
    std::string_view text;
    const Alphabet& alphabet;
    std::size_t pos = 0;
    std::size_t line = 1, col = 1;

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (text[pos + i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        pos += n;
    }

    Token next() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            advance(1);
        if (pos >= text.size()) return {Token::Type::end, Symbol(), line, col};
        std::size_t l = line, c = col;
        char ch = text[pos];
        switch (ch) {
            case '|': advance(1); return {Token::Type::alt, Symbol(), l, c};
            case '*': advance(1); return {Token::Type::star, Symbol(), l, c};
            case '.': advance(1); return {Token::Type::dot, Symbol(), l, c};
            case '(': advance(1); return {Token::Type::lparen, Symbol(), l, c};
            case ')': advance(1); return {Token::Type::rparen, Symbol(), l, c};
            case '%': {
                if (text.substr(pos, 6) == "%empty") {
                    advance(6);
                    return {Token::Type::empty_lang, Symbol(), l, c};
                }
                if (text.substr(pos, 4) == "%eps") {
                    advance(4);
                    return {Token::Type::eps, Symbol(), l, c};
                }
                throw ParseError("unknown %-keyword", l, c);
            }
            default: break;
        }
        // Longest alphabet symbol name starting here.
        std::size_t best = 0;
        Symbol found;
        for (Symbol s : alphabet.symbols()) {
            const std::string& name = s.name();
            if (name.size() > best && text.substr(pos, name.size()) == name) {
                best = name.size();
                found = s;
            }
        }
        if (best == 0) throw ParseError("unknown symbol name", l, c);
        advance(best);
        return {Token::Type::sym, found, l, c};
    }
};

struct Parser {
    std::vector<Token> tokens;
    std::size_t at = 0;

    const Token& peek() const { return tokens[at]; }
    Token take() { return tokens[at++]; }

    Regex parse_alt() {
        std::vector<Regex> parts{parse_concat()};
        while (peek().type == Token::Type::alt) {
            take();
            parts.push_back(parse_concat());
        }
        return Regex::alt(std::move(parts));
    }

    static bool starts_atom(Token::Type t) {
        return t == Token::Type::sym || t == Token::Type::lparen || t == Token::Type::empty_lang ||
               t == Token::Type::eps;
    }

    Regex parse_concat() {
        std::vector<Regex> parts{parse_postfix()};
        for (;;) {
            if (peek().type == Token::Type::dot) {
                take();
                parts.push_back(parse_postfix());
            } else if (starts_atom(peek().type)) {
                parts.push_back(parse_postfix());
            } else {
                break;
            }
        }
        return Regex::concat(std::move(parts));
    }

    Regex parse_postfix() {
        Regex r = parse_atom();
        while (peek().type == Token::Type::star) {
            take();
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex parse_atom() {
        Token t = take();
        switch (t.type) {
            case Token::Type::sym: return Regex::literal(t.sym);
            case Token::Type::empty_lang: return Regex::empty();
            case Token::Type::eps: return Regex::epsilon();
            case Token::Type::lparen: {
                Regex r = parse_alt();
                Token close = take();
                if (close.type != Token::Type::rparen)
                    throw ParseError("expected ')'", close.line, close.col);
                return r;
            }
            default: throw ParseError("expected an expression", t.line, t.col);
        }
    }
};

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    Lexer lex{text, alphabet};
    Parser p;
    for (;;) {
        Token t = lex.next();
        bool end = t.type == Token::Type::end;
        p.tokens.push_back(std::move(t));
        if (end) break;
    }
    Regex r = p.parse_alt();
    if (p.peek().type != Token::Type::end)
        throw ParseError("trailing input after expression", p.peek().line, p.peek().col);
    return r;
}

// ---------------------------------------------------------------------------
// Printing: union < concat < star in binding strength.

namespace {

int level(const Regex& r) {
    switch (r.kind()) {
        case Regex::Kind::alt: return 0;
        case Regex::Kind::concat: return 1;
        default: return 2;
    }
}

void print_into(const Regex& r, std::string& out, int min_level) {
    bool parens = level(r) < min_level;
    if (parens) out += '(';
    switch (r.kind()) {
        case Regex::Kind::empty: out += "%empty"; break;
        case Regex::Kind::literal: out += r.lit().name(); break;
        case Regex::Kind::alt:
            for (std::size_t i = 0; i < r.parts().size(); ++i) {
                if (i) out += " | ";
                print_into(r.parts()[i], out, 1);
            }
            break;
        case Regex::Kind::concat:
            for (std::size_t i = 0; i < r.parts().size(); ++i) {
                if (i) out += ' ';
                print_into(r.parts()[i], out, 2);
            }
            break;
        case Regex::Kind::star: {
            const Regex& c = r.parts()[0];
            bool need = level(c) < 2 || c.kind() == Regex::Kind::star;
            if (need) out += '(';
            print_into(c, out, 0);
            if (need) out += ')';
            out += '*';
            break;
        }
    }
    if (parens) out += ')';
}

}  // namespace

std::string print_regex(const Regex& r) {
    std::string out;
    print_into(r, out, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Compilation (Thompson construction)

namespace {

struct Fragment {
    uint32_t in, out;
};

Fragment build(const Regex& r, Nfa& n) {
    switch (r.kind()) {
        case Regex::Kind::empty: {
            uint32_t a = n.add_state(), b = n.add_state();
            return {a, b};
        }
        case Regex::Kind::literal: {
            uint32_t a = n.add_state(), b = n.add_state();
            auto idx = n.alphabet.index_of(r.lit());
            if (!idx) throw ValidationError("regex literal outside alphabet: " + r.lit().name());
            n.add_move(a, *idx, b);
            return {a, b};
        }
        case Regex::Kind::concat: {
            Fragment acc = build(r.parts()[0], n);
            for (std::size_t i = 1; i < r.parts().size(); ++i) {
                Fragment f = build(r.parts()[i], n);
                n.add_eps(acc.out, f.in);
                acc.out = f.out;
            }
            return acc;
        }
        case Regex::Kind::alt: {
            uint32_t a = n.add_state(), b = n.add_state();
            for (const Regex& p : r.parts()) {
                Fragment f = build(p, n);
                n.add_eps(a, f.in);
                n.add_eps(f.out, b);
            }
            return {a, b};
        }
        case Regex::Kind::star: {
            uint32_t a = n.add_state(), b = n.add_state();
            Fragment f = build(r.parts()[0], n);
            n.add_eps(a, b);
            n.add_eps(a, f.in);
            n.add_eps(f.out, f.in);
            n.add_eps(f.out, b);
            return {a, b};
        }
    }
    throw ValidationError("unreachable regex kind");
}

}  // namespace

Nfa regex_to_nfa(const Regex& r, const Alphabet& alphabet) {
    Nfa n = nfa_blank(alphabet);
    Fragment f = build(r, n);
    n.starts = {f.in};
    n.accepting[f.out] = true;
    return n;
}

Dfa regex_compile(const Regex& r, const Alphabet& alphabet, std::size_t state_cap) {
    return determinize_minimize(regex_to_nfa(r, alphabet), state_cap);
}

Dfa regex_compile(std::string_view text, const Alphabet& alphabet, std::size_t state_cap) {
    return regex_compile(parse_regex(text, alphabet), alphabet, state_cap);
}

}  // namespace tcw
