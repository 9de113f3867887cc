#pragma once

#include <string_view>

#include "rlz2lz/core.hpp"

namespace rlz2lz {

// Suffix array of the reference with rank-space minimum structures over the
// adjacent-LCP and suffix-start arrays.  Answers "longest match starting
// earlier" and "leftmost occurrence" queries for the greedy parsers.  Borrows
// the reference text; the caller keeps it alive.
class ReferenceIndex {
 public:
  explicit ReferenceIndex(std::string_view ref);

  struct Match {
    u64 src = 0;  // leftmost earlier occurrence, 0 when len == 0
    u64 len = 0;
  };
  // Longest prefix of R[pos..] that also occurs starting strictly before pos
  // (the occurrence may overlap pos), with the leftmost such start recorded.
  [[nodiscard]] Match longest_prior_match(u64 pos) const;
  // Leftmost occurrence in R of R[pos..pos+d-1], d >= 1.
  [[nodiscard]] u64 leftmost_source(u64 pos, u64 d) const;

  // Half-open rank interval of suffixes sharing the pattern matched so far.
  struct SaInterval {
    u64 lo = 0;
    u64 hi = 0;
    [[nodiscard]] bool empty() const noexcept { return hi <= lo; }
  };
  [[nodiscard]] SaInterval full() const noexcept;
  // Narrow to suffixes whose character at offset depth equals c.
  [[nodiscard]] SaInterval refine(SaInterval i, u64 depth, unsigned char c) const;
  // Smallest 1-based start position among the suffixes in the interval.
  [[nodiscard]] u64 leftmost_in(SaInterval i) const;

  [[nodiscard]] u64 size() const noexcept { return ref_.size(); }
  [[nodiscard]] u64 heap_words() const noexcept;

 private:
  [[nodiscard]] u64 lcp_between_(u64 ra, u64 rb) const;  // adjacent-lcp min

  std::string_view ref_;
  std::vector<u32> sa_;   // 0-based suffix starts in rank order
  std::vector<u32> inv_;  // rank of each suffix
  std::vector<u32> lcp_;  // lcp_[r] = lcp(suffix sa_[r], suffix sa_[r+1])
  std::vector<u32> lcp_min_;
  std::vector<u32> sa_min_;
  u64 seg_ = 0;  // leaf count of both minimum trees
};

// Greedy factorization of the reference, same conventions as the oracle
// parser: longest previously occurring prefix, leftmost source, one explicit
// character per phrase.
Lz77Parse lz77_parse_reference(std::string_view ref);
Lz77Parse lz77_parse_reference(std::string_view ref, const ReferenceIndex& index);

// Greedy parse of the tail against the indexed reference; throws
// NoReferenceOccurrence with the 1-based position *within the tail*.
std::vector<RlzPhrase> rlz_parse(std::string_view tail, const ReferenceIndex& index);

// Assemble the boundary structure from the two parses.
CombinedParse build_combined(const Lz77Parse& ref_parse,
                             const std::vector<RlzPhrase>& phrases, u64 ref_len);

// Cut text at ref_len and parse the tail; NoReferenceOccurrence positions are
// absolute text positions here.
RlzArchive build_archive(std::string_view text, u64 ref_len);

}  // namespace rlz2lz
