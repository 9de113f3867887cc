#include "rlz2lz/oracle.hpp"

#include <algorithm>

namespace rlz2lz::oracle {

namespace {

// 1-based position of the first occurrence of text[i..i+d-1] in text.
u64 leftmost_occurrence(std::string_view text, u64 i, u64 d) {
  return text.find(text.substr(i - 1, d)) + 1;
}

}  // namespace

Lz77Parse naive_lz77(std::string_view text) {
  const u64 n = text.size();
  Lz77Parse parse;
  u64 i = 1;
  while (i <= n) {
    u64 best = 0;
    for (u64 p = 1; p < i; ++p) {
      u64 d = 0;
      while (i + d <= n && at1(text, p + d) == at1(text, i + d)) ++d;
      best = std::max(best, d);
    }
    u64 copy_len = best;
    if (copy_len == n - i + 1) --copy_len;  // keep the final character explicit
    Lz77Triple t;
    t.copy_len = copy_len;
    t.src = copy_len == 0 ? kNoSource : leftmost_occurrence(text, i, copy_len);
    t.last = text[i + copy_len - 1];
    parse.triples.push_back(t);
    i += copy_len + 1;
  }
  return parse;
}

std::vector<RlzPhrase> naive_rlz(std::string_view text, u64 ref_len) {
  const u64 n = text.size();
  if (ref_len > n) throw OutOfRange("reference longer than the text");
  std::vector<RlzPhrase> phrases;
  u64 i = ref_len + 1;
  while (i <= n) {
    u64 best = 0;
    u64 best_src = 0;
    for (u64 p = 1; p <= ref_len; ++p) {
      u64 d = 0;
      while (i + d <= n && p + d <= ref_len && at1(text, p + d) == at1(text, i + d))
        ++d;
      if (d > best) {
        best = d;
        best_src = p;
      }
    }
    if (best == 0)
      throw NoReferenceOccurrence("tail character missing from the reference", i);
    phrases.push_back({best_src, best});
    i += best;
  }
  return phrases;
}

OracleContext make_context(const RlzArchive& archive) {
  OracleContext ctx;
  ctx.text = expand_rlz(archive);
  u64 pos = 0;
  for (const Lz77Triple& t : naive_lz77(archive.reference).triples) {
    pos += t.copy_len + 1;
    ctx.ends.push_back(pos);
  }
  for (const RlzPhrase& p : archive.phrases) {
    pos += p.len;
    ctx.ends.push_back(pos);
  }
  return ctx;
}

std::optional<u64> naive_split_leftmost(const OracleContext& ctx,
                                        std::string_view first,
                                        std::string_view second) {
  if (first.empty()) throw OutOfRange("first part of a split pattern is empty");
  std::string pattern(first);
  pattern += second;
  const u64 n = ctx.text.size();
  const u64 m = pattern.size();
  for (u64 s = 1; s + m - 1 <= n; ++s) {
    if (ctx.text.compare(s - 1, m, pattern) != 0) continue;
    if (std::binary_search(ctx.ends.begin(), ctx.ends.end(), s + first.size() - 1))
      return s;
  }
  return std::nullopt;
}

}  // namespace rlz2lz::oracle
