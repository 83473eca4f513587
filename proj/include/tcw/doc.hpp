#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tcw {

// One entry of a workspace document. Exactly one of three shapes:
//   scalar   "key: value"
//   items    "key:" followed by indented plain lines
//   children "key:" followed by indented sub-entries
// An entry with nothing after "key:" is an empty items list.
struct DocEntry {
    std::string key;
    bool has_value = false;
    std::string value;
    std::vector<std::string> items;
    std::vector<DocEntry> children;

    bool operator==(const DocEntry&) const = default;
};

struct Doc {
    std::vector<DocEntry> entries;

    bool operator==(const Doc&) const = default;
};

// Strict line format: LF line ends, two-space indents, no tabs, no trailing
// blanks. Blank lines and '#' comment lines are skipped on input and never
// written, so print_doc(parse_doc(s)) is a fixpoint.
Doc parse_doc(const std::string& text);
std::string print_doc(const Doc& doc);

// Field access for codecs. The need_* forms throw ValidationError.
const DocEntry* find_entry(const std::vector<DocEntry>& entries, std::string_view key);
const DocEntry& need_entry(const std::vector<DocEntry>& entries, std::string_view key);
std::string need_scalar(const std::vector<DocEntry>& entries, std::string_view key);
const std::vector<std::string>& need_items(const std::vector<DocEntry>& entries, std::string_view key);

std::uint32_t parse_u32(std::string_view text, std::string_view what);
std::vector<std::uint32_t> parse_u32_list(std::string_view text, std::string_view what);
std::vector<std::string> split_fields(std::string_view line);

}  // namespace tcw
