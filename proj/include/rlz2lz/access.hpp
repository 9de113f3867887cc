#pragma once

#include "rlz2lz/core.hpp"

namespace rlz2lz {

// Random access to the text directly from the archive: a position in the
// reference is read verbatim, a position in the tail is redirected through
// its phrase's copy source.  Borrows the archive and parse, owns nothing.
class PhraseDirectory {
 public:
  PhraseDirectory(const RlzArchive& archive, const CombinedParse& combined)
      : archive_(&archive), combined_(&combined) {}

  [[nodiscard]] char char_at(u64 k) const;
  // T[a..b] as a plain string; empty when a > b.
  [[nodiscard]] std::string extract(u64 a, u64 b) const;
  [[nodiscard]] u64 text_len() const noexcept { return combined_->text_len(); }
  [[nodiscard]] u64 heap_words() const noexcept { return 0; }

 private:
  const RlzArchive* archive_;
  const CombinedParse* combined_;
};

}  // namespace rlz2lz
