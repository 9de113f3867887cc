#include "rlz2lz/access.hpp"

#include <algorithm>

namespace rlz2lz {

char PhraseDirectory::char_at(u64 k) const {
  if (k < 1 || k > text_len()) throw OutOfRange("char_at outside the text");
  const u64 ell = combined_->ref_len;
  if (k <= ell) return archive_->reference[k - 1];
  const u64 idx = combined_->phrase_at(k);
  const u64 off = k - combined_->start_of(idx);
  return archive_->reference[combined_->src_of(idx) - 1 + off];
}

std::string PhraseDirectory::extract(u64 a, u64 b) const {
  if (a > b) return {};
  if (a < 1 || b > text_len()) throw OutOfRange("extract outside the text");
  std::string out;
  out.reserve(b - a + 1);
  const u64 ell = combined_->ref_len;
  u64 k = a;
  if (k <= ell) {
    const u64 take = std::min(b, ell) - k + 1;
    out.append(archive_->reference, k - 1, take);
    k += take;
  }
  while (k <= b) {
    const u64 idx = combined_->phrase_at(k);
    const u64 off = k - combined_->start_of(idx);
    const u64 take = std::min(b, combined_->end_of(idx)) - k + 1;
    out.append(archive_->reference, combined_->src_of(idx) - 1 + off, take);
    k += take;
  }
  return out;
}

}  // namespace rlz2lz
