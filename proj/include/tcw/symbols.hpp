#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tcw {

// An interned name. Two symbols are identical iff they were interned from the
// same string, so display names map one-to-one onto identities.
class Symbol {
  public:
    Symbol() : id_(UINT32_MAX) {}

    static Symbol intern(std::string_view name);

    const std::string& name() const;
    uint32_t id() const { return id_; }
    bool valid() const { return id_ != UINT32_MAX; }

    friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
    // Interner order; use Alphabet::index_of for language-level ordering.
    friend std::strong_ordering operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

  private:
    explicit Symbol(uint32_t id) : id_(id) {}
    uint32_t id_;
};

using Word = std::vector<Symbol>;

// A finite, ordered, duplicate-free list of symbols. The order is the
// insertion order and defines the lexicographic order on words.
class Alphabet {
  public:
    Alphabet();
    explicit Alphabet(std::vector<Symbol> symbols);

    // Splits a whitespace-separated list of names, e.g. "a b c".
    static Alphabet parse(std::string_view names);

    std::size_t size() const { return data_->symbols.size(); }
    Symbol at(std::size_t i) const { return data_->symbols[i]; }
    const std::vector<Symbol>& symbols() const { return data_->symbols; }
    std::optional<uint32_t> index_of(Symbol s) const;
    bool contains(Symbol s) const { return index_of(s).has_value(); }

    bool operator==(const Alphabet& o) const { return data_->symbols == o.data_->symbols; }

    std::string str() const;  // space-joined names

  private:
    struct Data {
        std::vector<Symbol> symbols;
        std::unordered_map<uint32_t, uint32_t> index;
    };
    std::shared_ptr<const Data> data_;
};

// Length-then-lexicographic order, with per-position order taken from the
// alphabet. Symbols must belong to the alphabet.
bool word_less(const Word& a, const Word& b, const Alphabet& alphabet);

// Renders "a b c"; the empty word renders as "%eps".
std::string word_str(const Word& w);

Word make_word(std::initializer_list<const char*> names);

}  // namespace tcw
