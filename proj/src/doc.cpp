#include "tcw/doc.hpp"

#include <charconv>
#include <cstdint>

#include "tcw/errors.hpp"

namespace tcw {

namespace {

struct Line {
    std::size_t number;  // 1-based position in the source text
    std::size_t indent;
    std::string_view body;
};

bool valid_key(std::string_view k) {
    if (k.empty()) return false;
    for (char c : k)
        if (!(c == '_' || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return !(k[0] >= '0' && k[0] <= '9');
}

// A block line starts an entry iff its first whitespace-free token ends in ':'.
bool looks_like_entry(std::string_view body) {
    std::size_t sp = body.find(' ');
    std::string_view head = sp == std::string_view::npos ? body : body.substr(0, sp);
    return !head.empty() && head.back() == ':';
}

std::vector<Line> scan_lines(const std::string& text) {
    std::vector<Line> out;
    std::size_t pos = 0, number = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) {
            if (pos == text.size()) break;  // no trailing newline on the last line is fine
            end = text.size();
        }
        ++number;
        std::string_view line(text.data() + pos, end - pos);
        pos = end + 1;
        std::size_t indent = 0;
        while (indent < line.size() && line[indent] == ' ') ++indent;
        std::string_view body = line.substr(indent);
        if (body.empty()) continue;
        if (body[0] == '#') continue;
        if (body.find('\t') != std::string_view::npos)
            throw ParseError("tab character in document", number, line.find('\t') + 1);
        if (body.back() == ' ')
            throw ParseError("trailing whitespace", number, line.size());
        if (indent % 2 != 0) throw ParseError("indent is not a multiple of two spaces", number, 1);
        out.push_back({number, indent / 2, body});
    }
    return out;
}

std::vector<DocEntry> parse_entries(const std::vector<Line>& lines, std::size_t& pos, std::size_t depth);

DocEntry parse_entry(const std::vector<Line>& lines, std::size_t& pos, std::size_t depth) {
    const Line& line = lines[pos];
    if (!looks_like_entry(line.body))
        throw ParseError("expected 'key:' or 'key: value'", line.number, line.indent * 2 + 1);
    std::size_t sp = line.body.find(' ');
    std::string_view head = sp == std::string_view::npos ? line.body : line.body.substr(0, sp);
    DocEntry e;
    e.key = std::string(head.substr(0, head.size() - 1));
    if (!valid_key(e.key))
        throw ParseError("bad key '" + e.key + "'", line.number, line.indent * 2 + 1);
    ++pos;
    if (sp != std::string_view::npos) {
        e.has_value = true;
        e.value = std::string(line.body.substr(sp + 1));
        if (e.value.empty() || e.value.front() == ' ')
            throw ParseError("exactly one space after ':'", line.number, line.indent * 2 + head.size() + 1);
        return e;
    }
    if (pos >= lines.size() || lines[pos].indent <= depth) return e;  // empty list
    if (lines[pos].indent != depth + 1)
        throw ParseError("unexpected indent", lines[pos].number, 1);
    if (looks_like_entry(lines[pos].body)) {
        e.children = parse_entries(lines, pos, depth + 1);
        return e;
    }
    while (pos < lines.size() && lines[pos].indent == depth + 1) {
        if (looks_like_entry(lines[pos].body))
            throw ParseError("item block mixes in a 'key:' line", lines[pos].number, 1);
        e.items.emplace_back(lines[pos].body);
        ++pos;
    }
    if (pos < lines.size() && lines[pos].indent > depth + 1)
        throw ParseError("unexpected indent", lines[pos].number, 1);
    return e;
}

std::vector<DocEntry> parse_entries(const std::vector<Line>& lines, std::size_t& pos, std::size_t depth) {
    std::vector<DocEntry> out;
    while (pos < lines.size() && lines[pos].indent == depth) out.push_back(parse_entry(lines, pos, depth));
    if (pos < lines.size() && lines[pos].indent > depth)
        throw ParseError("unexpected indent", lines[pos].number, 1);
    return out;
}

void print_entries(std::string& out, const std::vector<DocEntry>& entries, std::size_t depth) {
    std::string pad(depth * 2, ' ');
    for (const DocEntry& e : entries) {
        out += pad;
        out += e.key;
        out += ':';
        if (e.has_value) {
            out += ' ';
            out += e.value;
            out += '\n';
            continue;
        }
        out += '\n';
        if (!e.children.empty()) {
            print_entries(out, e.children, depth + 1);
            continue;
        }
        for (const std::string& item : e.items) {
            out += pad;
            out += "  ";
            out += item;
            out += '\n';
        }
    }
}

}  // namespace

Doc parse_doc(const std::string& text) {
    std::vector<Line> lines = scan_lines(text);
    if (lines.empty()) throw ParseError("empty document", 1, 1);
    std::size_t pos = 0;
    Doc d;
    d.entries = parse_entries(lines, pos, 0);
    if (pos < lines.size()) throw ParseError("unexpected indent", lines[pos].number, 1);
    return d;
}

std::string print_doc(const Doc& doc) {
    std::string out;
    print_entries(out, doc.entries, 0);
    return out;
}

const DocEntry* find_entry(const std::vector<DocEntry>& entries, std::string_view key) {
    for (const DocEntry& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

const DocEntry& need_entry(const std::vector<DocEntry>& entries, std::string_view key) {
    const DocEntry* e = find_entry(entries, key);
    if (!e) throw ValidationError("missing field '" + std::string(key) + "'");
    return *e;
}

std::string need_scalar(const std::vector<DocEntry>& entries, std::string_view key) {
    const DocEntry& e = need_entry(entries, key);
    if (!e.has_value) throw ValidationError("field '" + std::string(key) + "' needs a value");
    return e.value;
}

const std::vector<std::string>& need_items(const std::vector<DocEntry>& entries, std::string_view key) {
    const DocEntry& e = need_entry(entries, key);
    if (e.has_value || !e.children.empty())
        throw ValidationError("field '" + std::string(key) + "' needs a list");
    return e.items;
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw ValidationError("bad " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

std::vector<std::uint32_t> parse_u32_list(std::string_view text, std::string_view what) {
    std::vector<std::uint32_t> out;
    for (const std::string& f : split_fields(text)) out.push_back(parse_u32(f, what));
    return out;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace tcw
