#pragma once

#include <optional>

#include "rlz2lz/access.hpp"
#include "rlz2lz/boundary_index.hpp"
#include "rlz2lz/core.hpp"
#include "rlz2lz/kr_hash.hpp"

namespace rlz2lz {

struct ConvertStats {
  u64 split_queries = 0;  // rectangle-minimum evaluations
  u64 tie_updates = 0;    // times a same-length occurrence improved the source
};

// Rebuilds the greedy factorization of the whole text from the archive alone.
// For the phrase starting at i+1 it grows the longest prefix that occurs
// starting at or before i: every prefix's leftmost occurrence is split by
// some parse boundary, so walking the split position j and querying the
// boundary grid for the longest valid extension finds both the length and
// the leftmost source without touching the text.
class Converter {
 public:
  explicit Converter(const RlzArchive& archive, u64 seed = 0);

  // The full factorization; phrases match the direct greedy parser exactly.
  [[nodiscard]] Lz77Parse run() const;

  struct BoundaryMatch {
    u64 end = 0;    // largest k: T[i+1..k] occurs split exactly after j
    u64 start = 0;  // leftmost start (<= i) of such an occurrence of that k
    bool operator==(const BoundaryMatch&) const = default;
  };
  // Longest extension using only occurrences split at first-part end j and
  // starting at or before i; nullopt when no such occurrence exists at all.
  [[nodiscard]] std::optional<BoundaryMatch> longest_boundary_match(u64 i,
                                                                    u64 j) const;

  // Phrase covering T[i+1..]; the final phrase keeps its last character
  // explicit even when the match runs to the end of the text.
  [[nodiscard]] Lz77Triple next_phrase(u64 i) const;
  [[nodiscard]] Lz77Triple final_phrase(u64 i) const;

  // Recheck every fingerprint equality claim against extracted bytes.
  void enable_verification();
  [[nodiscard]] u64 collision_count() const noexcept {
    return fp_->collision_count();
  }

  [[nodiscard]] const ConvertStats& stats() const noexcept { return stats_; }
  // Largest number of 8-byte words the support structures held at once,
  // including the suffix-array stage that is freed before queries start.
  [[nodiscard]] u64 peak_index_words() const noexcept {
    return peak_index_words_;
  }

  [[nodiscard]] const CombinedParse& combined() const noexcept {
    return combined_;
  }
  [[nodiscard]] const PhraseDirectory& directory() const noexcept {
    return *dir_;
  }
  [[nodiscard]] const FingerprintIndex& fingerprints() const noexcept {
    return *fp_;
  }
  [[nodiscard]] const BoundaryIndex& grid() const noexcept { return *grid_; }

 private:
  const RlzArchive* archive_;
  CombinedParse combined_;
  std::optional<FingerprintIndex> fp_;
  std::optional<PhraseDirectory> dir_;
  std::optional<BoundaryIndex> grid_;
  u64 peak_index_words_ = 0;
  mutable ConvertStats stats_;
};

// Convenience wrapper: build the converter, run it, return the parse.
Lz77Parse convert(const RlzArchive& archive, u64 seed = 0);

}  // namespace rlz2lz
