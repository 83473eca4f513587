#pragma once

#include <string>

#include "tcw/classify.hpp"
#include "tcw/dfa.hpp"
#include "tcw/doc.hpp"
#include "tcw/monotone.hpp"
#include "tcw/nfa.hpp"
#include "tcw/regex.hpp"
#include "tcw/rlg.hpp"
#include "tcw/slt.hpp"
#include "tcw/tc.hpp"

namespace tcw {

// Workspace documents: "format: 1" plus a "kind" field naming the codec.
std::string doc_kind(const Doc& doc);

Doc dfa_to_doc(const Dfa& d);
Dfa dfa_from_doc(const Doc& doc);
Doc nfa_to_doc(const Nfa& n);
Nfa nfa_from_doc(const Doc& doc);
Doc rlg_to_doc(const RightLinearGrammar& g);
RightLinearGrammar rlg_from_doc(const Doc& doc);
Doc regex_to_doc(const Regex& r, const Alphabet& v);
std::pair<Regex, Alphabet> regex_from_doc(const Doc& doc);
Doc slt_to_doc(const SltDescription& desc);
SltDescription slt_from_doc(const Doc& doc);
Doc cfg_to_doc(const Cfg& g);
Cfg cfg_from_doc(const Doc& doc);
// Rewriting grammars share the rule-line syntax "lhs -> rhs" with
// multi-symbol sides; "%eps" stands for an empty side.
Doc monotone_to_doc(const MonotoneGrammar& g);
MonotoneGrammar monotone_from_doc(const Doc& doc);
Doc kuroda_to_doc(const KurodaGrammar& g);
KurodaGrammar kuroda_from_doc(const Doc& doc);
// TC grammars embed a cfg section plus a control block; the control parses
// as any language kind (dfa, nfa, rlg, regex, slt) and prints as a dfa.
Doc tc_to_doc(const TcGrammar& g);
TcGrammar tc_from_doc(const Doc& doc);
// Classification reports are print-only: verdicts, bounds, certificates.
Doc classification_to_doc(const ClassificationReport& r);

// Any language-valued document (dfa, nfa, rlg, regex, slt) compiled to an automaton.
Dfa compile_language_doc(const Doc& doc);

// One word per line; "%eps" stands for the empty word.
Word parse_word_line(const std::string& line, const Alphabet& v);
Alphabet alphabet_from_scalar(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tcw
