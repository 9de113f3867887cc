#include "rlz2lz/parse_build.hpp"

#include <algorithm>
#include <limits>

namespace rlz2lz {

namespace {

constexpr u32 kNone32 = std::numeric_limits<u32>::max();

// Minimum over t's leaf range [l, r), t laid out as an iterative tree with m
// leaves at t[m..2m).
u32 tree_min(const std::vector<u32>& t, u64 m, u64 l, u64 r) {
  u32 res = kNone32;
  for (l += m, r += m; l < r; l >>= 1, r >>= 1) {
    if (l & 1) res = std::min(res, t[l++]);
    if (r & 1) res = std::min(res, t[--r]);
  }
  return res;
}

void build_tree(std::vector<u32>& t, u64 m) {
  for (u64 i = m; i-- > 1;) t[i] = std::min(t[2 * i], t[2 * i + 1]);
}

}  // namespace

ReferenceIndex::ReferenceIndex(std::string_view ref) : ref_(ref) {
  const u64 n = ref.size();
  sa_.resize(n);
  inv_.resize(n);
  if (n == 0) return;

  std::vector<u32> rank(n), tmp(n);
  for (u64 i = 0; i < n; ++i) {
    sa_[i] = static_cast<u32>(i);
    rank[i] = static_cast<unsigned char>(ref[i]);
  }
  for (u64 k = 1;; k <<= 1) {
    auto key2 = [&](u32 i) -> u32 { return i + k < n ? rank[i + k] + 1 : 0; };
    std::sort(sa_.begin(), sa_.end(), [&](u32 a, u32 b) {
      if (rank[a] != rank[b]) return rank[a] < rank[b];
      return key2(a) < key2(b);
    });
    tmp[sa_[0]] = 0;
    for (u64 r = 1; r < n; ++r) {
      const u32 a = sa_[r - 1];
      const u32 b = sa_[r];
      const bool same = rank[a] == rank[b] && key2(a) == key2(b);
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    rank.swap(tmp);
    if (rank[sa_[n - 1]] == n - 1 || k >= n) break;
  }
  for (u64 r = 0; r < n; ++r) inv_[sa_[r]] = static_cast<u32>(r);

  lcp_.assign(n, kNone32);  // last slot stays a sentinel
  u64 h = 0;
  for (u64 i = 0; i < n; ++i) {
    if (inv_[i] + 1 < n) {
      const u64 j = sa_[inv_[i] + 1];
      while (i + h < n && j + h < n && ref[i + h] == ref[j + h]) ++h;
      lcp_[inv_[i]] = static_cast<u32>(h);
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }

  seg_ = n;
  sa_min_.resize(2 * n);
  lcp_min_.resize(2 * n);
  for (u64 i = 0; i < n; ++i) {
    sa_min_[n + i] = sa_[i];
    lcp_min_[n + i] = lcp_[i];
  }
  build_tree(sa_min_, n);
  build_tree(lcp_min_, n);
}

u64 ReferenceIndex::lcp_between_(u64 ra, u64 rb) const {
  if (ra > rb) std::swap(ra, rb);
  if (ra == rb) return ref_.size() - sa_[ra];
  return tree_min(lcp_min_, seg_, ra, rb);
}

ReferenceIndex::Match ReferenceIndex::longest_prior_match(u64 pos) const {
  const u64 n = ref_.size();
  if (pos < 1 || pos > n) throw OutOfRange("position outside the reference");
  const u64 r = inv_[pos - 1];
  const u32 limit = static_cast<u32>(pos - 1);  // 0-based starts allowed: < limit
  Match best;
  if (limit == 0) return best;

  // Nearest rank on each side of r whose suffix starts before pos; moving
  // further away can only shrink the shared prefix.
  if (r > 0 && tree_min(sa_min_, seg_, 0, r) < limit) {
    u64 a = 0, b = r;  // rightmost qualifying rank in [a, b)
    while (b - a > 1) {
      const u64 mid = (a + b) / 2;
      if (tree_min(sa_min_, seg_, mid, b) < limit) a = mid;
      else b = mid;
    }
    const u64 d = lcp_between_(a, r);
    if (d > best.len) best.len = d;
  }
  if (r + 1 < n && tree_min(sa_min_, seg_, r + 1, n) < limit) {
    u64 a = r + 1, b = n;  // leftmost qualifying rank in [a, b)
    while (b - a > 1) {
      const u64 mid = (a + b) / 2;
      if (tree_min(sa_min_, seg_, a, mid) < limit) b = mid;
      else a = mid;
    }
    const u64 d = lcp_between_(r, a);
    if (d > best.len) best.len = d;
  }
  if (best.len == 0) return best;
  best.src = leftmost_source(pos, best.len);
  return best;
}

u64 ReferenceIndex::leftmost_source(u64 pos, u64 d) const {
  const u64 n = ref_.size();
  if (pos < 1 || d < 1 || pos + d - 1 > n)
    throw OutOfRange("substring outside the reference");
  const u64 r = inv_[pos - 1];
  u64 lo = r, hi = r;
  {
    u64 a = 0, b = r;  // smallest rank whose block down to r keeps lcp >= d
    while (a < b) {
      const u64 mid = (a + b) / 2;
      if (tree_min(lcp_min_, seg_, mid, r) >= d) b = mid;
      else a = mid + 1;
    }
    lo = a;
  }
  {
    u64 a = r, b = n - 1;  // largest rank with lcp >= d from r upward
    while (a < b) {
      const u64 mid = (a + b + 1) / 2;
      if (tree_min(lcp_min_, seg_, r, mid) >= d) a = mid;
      else b = mid - 1;
    }
    hi = a;
  }
  return tree_min(sa_min_, seg_, lo, hi + 1) + 1;
}

ReferenceIndex::SaInterval ReferenceIndex::full() const noexcept {
  return {0, ref_.size()};
}

ReferenceIndex::SaInterval ReferenceIndex::refine(SaInterval i, u64 depth,
                                                  unsigned char c) const {
  if (i.empty()) return {0, 0};
  const u64 n = ref_.size();
  // Within the interval every suffix shares the first `depth` characters, so
  // rank order beyond that is the character at offset `depth`, suffixes that
  // end there sorting first.
  auto below = [&](int target) {
    u64 a = i.lo, b = i.hi;
    while (a < b) {
      const u64 mid = (a + b) / 2;
      const u64 p = sa_[mid] + depth;
      const int ch = p < n ? static_cast<unsigned char>(ref_[p]) : -1;
      if (ch < target) a = mid + 1;
      else b = mid;
    }
    return a;
  };
  return {below(c), below(static_cast<int>(c) + 1)};
}

u64 ReferenceIndex::leftmost_in(SaInterval i) const {
  if (i.empty() || i.hi > ref_.size()) throw OutOfRange("bad suffix interval");
  return tree_min(sa_min_, seg_, i.lo, i.hi) + 1;
}

u64 ReferenceIndex::heap_words() const noexcept {
  const u64 u32s = sa_.size() + inv_.size() + lcp_.size() + sa_min_.size() +
                   lcp_min_.size();
  return (u32s + 1) / 2;
}

Lz77Parse lz77_parse_reference(std::string_view ref) {
  const ReferenceIndex index(ref);
  return lz77_parse_reference(ref, index);
}

Lz77Parse lz77_parse_reference(std::string_view ref, const ReferenceIndex& index) {
  const u64 n = ref.size();
  Lz77Parse parse;
  u64 i = 1;
  while (i <= n) {
    u64 copy_len = index.longest_prior_match(i).len;
    if (copy_len == n - i + 1) --copy_len;  // keep the final character explicit
    Lz77Triple t;
    t.copy_len = copy_len;
    t.src = copy_len == 0 ? kNoSource : index.leftmost_source(i, copy_len);
    t.last = ref[i + copy_len - 1];
    parse.triples.push_back(t);
    i += copy_len + 1;
  }
  return parse;
}

std::vector<RlzPhrase> rlz_parse(std::string_view tail,
                                 const ReferenceIndex& index) {
  std::vector<RlzPhrase> phrases;
  const u64 m = tail.size();
  u64 i = 1;
  while (i <= m) {
    ReferenceIndex::SaInterval cur = index.full();
    u64 d = 0;
    while (i + d <= m) {
      const ReferenceIndex::SaInterval next =
          index.refine(cur, d, at1(tail, i + d));
      if (next.empty()) break;
      cur = next;
      ++d;
    }
    if (d == 0)
      throw NoReferenceOccurrence("tail character missing from the reference", i);
    phrases.push_back({index.leftmost_in(cur), d});
    i += d;
  }
  return phrases;
}

CombinedParse build_combined(const Lz77Parse& ref_parse,
                             const std::vector<RlzPhrase>& phrases, u64 ref_len) {
  CombinedParse c;
  c.ref_len = ref_len;
  u64 pos = 0;
  for (const Lz77Triple& t : ref_parse.triples) {
    pos += t.copy_len + 1;
    c.ends.push_back(pos);
  }
  if (pos != ref_len) throw MalformedTriple("reference parse length mismatch");
  c.ref_phrases = c.ends.size();
  for (const RlzPhrase& p : phrases) {
    pos += p.len;
    c.ends.push_back(pos);
    c.rlz_src.push_back(p.src);
  }
  return c;
}

RlzArchive build_archive(std::string_view text, u64 ref_len) {
  if (ref_len > text.size())
    throw OutOfRange("reference cut past the end of the text");
  RlzArchive archive;
  archive.reference = std::string(text.substr(0, ref_len));
  const ReferenceIndex index(archive.reference);
  try {
    archive.phrases = rlz_parse(text.substr(ref_len), index);
  } catch (const NoReferenceOccurrence& e) {
    throw NoReferenceOccurrence(e.what(), e.position() + ref_len);
  }
  return archive;
}

}  // namespace rlz2lz
