#pragma once

#include <optional>
#include <string_view>

#include "rlz2lz/core.hpp"

// Direct-scan reference implementations used to check the compressed-space
// structures.  Everything here works on the plain text and is deliberately
// simple; nothing is shared with the production code paths.
namespace rlz2lz::oracle {

// Greedy left-to-right factorization.  Each phrase copies the longest prefix
// of the remainder that also occurs starting strictly before the phrase
// (overlap with the phrase itself allowed), recorded with the leftmost
// occurrence of that prefix, followed by one explicit character.  When the
// match would swallow the end of the text the copy part is shortened by one
// so the final character stays explicit.
Lz77Parse naive_lz77(std::string_view text);

// Greedy parse of text[ref_len+1..n] against the prefix text[1..ref_len]:
// each phrase is the longest prefix of the remaining tail that occurs inside
// the reference, recorded with its leftmost occurrence there.  Throws
// NoReferenceOccurrence (carrying the absolute 1-based text position) when a
// tail character never appears in the reference.
std::vector<RlzPhrase> naive_rlz(std::string_view text, u64 ref_len);

// Plain text plus the sorted end positions of the combined parse: the greedy
// factorization of the reference followed by the archive phrases.
struct OracleContext {
  std::string text;
  std::vector<u64> ends;
};
OracleContext make_context(const RlzArchive& archive);

// Leftmost start of an occurrence of first+second whose first part ends
// exactly at a combined-parse boundary; first must be nonempty.
std::optional<u64> naive_split_leftmost(const OracleContext& ctx,
                                        std::string_view first,
                                        std::string_view second);

}  // namespace rlz2lz::oracle
