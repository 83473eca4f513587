#include "tcw/symbols.hpp"

#include <mutex>
#include <sstream>

#include "tcw/errors.hpp"

namespace tcw {

namespace {

struct Interner {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, uint32_t> ids;
};

Interner& interner() {
    static Interner table;
    return table;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
    if (name.empty()) throw ValidationError("symbol name must be non-empty");
    for (char c : name) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            throw ValidationError("symbol name must not contain whitespace: '" + std::string(name) + "'");
    }
    Interner& t = interner();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return Symbol(it->second);
    uint32_t id = static_cast<uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), id);
    return Symbol(id);
}

const std::string& Symbol::name() const {
    Interner& t = interner();
    std::lock_guard<std::mutex> lock(t.mu);
    if (id_ >= t.names.size()) throw ValidationError("invalid symbol");
    return t.names[id_];
}

Alphabet::Alphabet() : data_(std::make_shared<Data>()) {}

Alphabet::Alphabet(std::vector<Symbol> symbols) {
    auto d = std::make_shared<Data>();
    d->symbols = std::move(symbols);
    for (uint32_t i = 0; i < d->symbols.size(); ++i) {
        if (!d->symbols[i].valid()) throw ValidationError("invalid symbol in alphabet");
        auto [it, fresh] = d->index.emplace(d->symbols[i].id(), i);
        if (!fresh) throw ValidationError("duplicate symbol in alphabet: " + d->symbols[i].name());
    }
    data_ = std::move(d);
}

Alphabet Alphabet::parse(std::string_view names) {
    std::vector<Symbol> syms;
    std::istringstream in{std::string(names)};
    std::string tok;
    while (in >> tok) syms.push_back(Symbol::intern(tok));
    return Alphabet(std::move(syms));
}

std::optional<uint32_t> Alphabet::index_of(Symbol s) const {
    auto it = data_->index.find(s.id());
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

std::string Alphabet::str() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += at(i).name();
    }
    return out;
}

bool word_less(const Word& a, const Word& b, const Alphabet& alphabet) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        auto ia = alphabet.index_of(a[i]), ib = alphabet.index_of(b[i]);
        if (!ia || !ib) throw ValidationError("word_less: symbol outside alphabet");
        return *ia < *ib;
    }
    return false;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "%eps";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].name();
    }
    return out;
}

Word make_word(std::initializer_list<const char*> names) {
    Word w;
    for (const char* n : names) w.push_back(Symbol::intern(n));
    return w;
}

}  // namespace tcw
