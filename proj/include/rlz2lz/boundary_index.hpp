#pragma once

#include <optional>

#include "rlz2lz/core.hpp"
#include "rlz2lz/kr_hash.hpp"

namespace rlz2lz {

// 1-based inclusive interval of ranks in a sorted order.
struct RankInterval {
  u64 lo = 1;
  u64 hi = 0;
  [[nodiscard]] bool empty() const noexcept { return hi < lo; }
  bool operator==(const RankInterval&) const = default;
};

// Pattern split in two around a parse boundary; both parts name text ranges,
// only their content matters.
struct SplitQuery {
  TRange first;
  TRange second;
};

// One point per combined-parse boundary b: x is the rank of the text prefix
// T[1..b] in right-to-left order, y is the rank of the suffix T[b+1..n], and
// the weight is b itself.  An occurrence of first+second whose first part
// ends on a boundary corresponds to a point in the rectangle
// colex_range(first) x lex_range(second), and the minimum weight in that
// rectangle is the leftmost such boundary.  All string comparisons run on
// fingerprints; nothing here reads the text directly.
class BoundaryIndex {
 public:
  BoundaryIndex(const CombinedParse& combined, const FingerprintIndex& fp);

  // Phrase indices ordered by their boundary prefix read right to left.
  [[nodiscard]] const std::vector<u32>& colex_order() const noexcept {
    return xid_;
  }
  // Phrase indices ordered by the suffix following their boundary; the
  // phrase ending at n contributes the empty suffix and comes first.
  [[nodiscard]] const std::vector<u32>& suffix_order() const noexcept {
    return yid_;
  }

  // Ranks of the boundaries whose prefix ends with the pattern; the pattern
  // must be nonempty.
  [[nodiscard]] RankInterval colex_range(TRange first) const;
  // Ranks of the boundaries whose following suffix starts with the pattern;
  // an empty pattern matches everything.
  [[nodiscard]] RankInterval lex_range(TRange second) const;

  // Smallest boundary position among the points of the rectangle.
  [[nodiscard]] std::optional<u64> range_min(RankInterval x,
                                             RankInterval y) const;
  // Start of the leftmost occurrence of first+second split at a boundary.
  [[nodiscard]] std::optional<u64> split_leftmost(const SplitQuery& q) const;

  [[nodiscard]] u64 phrase_count() const noexcept { return xid_.size(); }
  [[nodiscard]] u64 heap_words() const noexcept;

 private:
  struct Order {
    std::vector<u32>* ids;
    const std::vector<u32>* llcp;
    const std::vector<u32>* rlcp;
  };

  [[nodiscard]] u64 bound_colex_(TRange pat, int threshold) const;
  [[nodiscard]] u64 bound_lex_(TRange pat, int threshold) const;
  void build_grid_(u64 v, u64 a, u64 b, std::vector<u32>& scratch, u64& next);
  void grid_min_(u64 v, u64 a, u64 b, u64 xlo, u64 xhi, u64 ylo, u64 yhi,
                 u32& best) const;

  const CombinedParse* combined_;
  const FingerprintIndex* fp_;
  std::vector<u32> xid_;     // boundary ids in prefix-colex order
  std::vector<u32> yid_;     // boundary ids in suffix order
  std::vector<u32> y_of_;    // suffix rank of each boundary id
  std::vector<u32> llcp_x_, rlcp_x_;  // bisection-tree lcp values, colex order
  std::vector<u32> llcp_y_, rlcp_y_;  // same for the suffix order
  std::vector<u32> node_begin_;       // grid node offsets into data_
  std::vector<u32> data_;             // per-node minimum trees over y-sorted ids
};

}  // namespace rlz2lz
