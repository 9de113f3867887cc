#include "rlz2lz/converter.hpp"

#include <algorithm>

#include "rlz2lz/parse_build.hpp"

namespace rlz2lz {

namespace {

// ends (u64 each) plus one source per tail phrase.
u64 combined_words(const CombinedParse& combined) {
  return combined.ends.size() + combined.rlz_src.size();
}

}  // namespace

Converter::Converter(const RlzArchive& archive, u64 seed) : archive_(&archive) {
  // Stage 1: parse the reference with a suffix array, then drop it.  Its
  // footprint dominates this stage and is gone before the grid exists.
  {
    ReferenceIndex ref_index(archive.reference);
    Lz77Parse ref_parse = lz77_parse_reference(archive.reference, ref_index);
    combined_ = build_combined(ref_parse, archive.phrases, archive.ref_len());
    peak_index_words_ = ref_index.heap_words() + combined_words(combined_);
  }
  // Stage 2: fingerprints over the boundaries, then the rank/grid index.
  fp_.emplace(archive, combined_, seed);
  dir_.emplace(archive, combined_);
  grid_.emplace(combined_, *fp_);
  peak_index_words_ =
      std::max(peak_index_words_, combined_words(combined_) +
                                      fp_->heap_words() + grid_->heap_words());
}

void Converter::enable_verification() {
  fp_->enable_verification(
      [this](u64 a, u64 b) { return dir_->extract(a, b); });
}

Lz77Parse Converter::run() const {
  Lz77Parse parse;
  const u64 n = combined_.text_len();
  u64 i = 0;
  while (i < n) {
    const Lz77Triple t = next_phrase(i);
    parse.triples.push_back(t);
    i += t.copy_len + 1;
  }
  return parse;
}

Lz77Triple Converter::next_phrase(u64 i) const {
  const u64 n = combined_.text_len();
  u64 kmax = i;   // largest k: T[i+1..k] occurs starting at or before i
  u64 smax = 0;   // leftmost such start for the current kmax

  for (u64 j = i + 1; j <= kmax + 1 && j <= n; ++j) {
    const RankInterval x = grid_->colex_range({i + 1, j});
    if (x.empty()) continue;  // no boundary splits an occurrence here

    // Minimum boundary weight over occurrences of T[i+1..k] whose first
    // j-i characters end at a boundary.  Weight w means start w-(j-i)+1,
    // so the occurrence begins at or before i exactly when w <= j-1.
    const auto probe = [&](u64 k) -> std::optional<u64> {
      ++stats_.split_queries;
      const TRange second = k > j ? TRange{j + 1, k} : TRange{};
      return grid_->range_min(x, grid_->lex_range(second));
    };

    const std::optional<u64> w0 = probe(kmax + 1);
    if (w0 && *w0 <= j - 1) {
      // Extending shrinks the rectangle and raises the minimum weight, so
      // validity is monotone in k: binary search the largest one.
      u64 lo = kmax + 1, hi = n + 1, w_lo = *w0;
      while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        const std::optional<u64> w = probe(mid);
        if (w && *w <= j - 1) {
          lo = mid;
          w_lo = *w;
        } else {
          hi = mid;
        }
      }
      kmax = lo;
      smax = w_lo - (j - i) + 1;
      if (kmax == n) break;  // match reaches the end; handled by final_phrase
    } else if (kmax >= j) {
      // No longer prefix splits here, but the current longest may, with an
      // earlier start: its leftmost occurrence is split at some j, and only
      // this re-probe sees the splits after the one that discovered kmax.
      const std::optional<u64> w = probe(kmax);
      if (w && *w <= j - 1) {
        const u64 s = *w - (j - i) + 1;
        if (s < smax) {
          smax = s;
          ++stats_.tie_updates;
        }
      }
    }
  }

  if (kmax == n) return final_phrase(i);
  const u64 m = kmax - i;
  if (m == 0) return {0, kNoSource, dir_->char_at(i + 1)};
  return {m, smax, dir_->char_at(kmax + 1)};
}

Lz77Triple Converter::final_phrase(u64 i) const {
  const u64 n = combined_.text_len();
  if (i + 1 == n) return {0, kNoSource, dir_->char_at(n)};

  // Copy part T[i+1..n-1]: the last character stays explicit.  Some
  // occurrence starts at or before i (the match that reached the end), so
  // the leftmost one does too and is split by a boundary; scan the splits.
  u64 best = 0;
  for (u64 j = i + 1; j + 1 <= n; ++j) {
    const RankInterval x = grid_->colex_range({i + 1, j});
    if (x.empty()) continue;
    ++stats_.split_queries;
    const TRange second = j + 1 < n ? TRange{j + 1, n - 1} : TRange{};
    const std::optional<u64> w =
        grid_->range_min(x, grid_->lex_range(second));
    if (!w || *w > j - 1) continue;
    const u64 s = *w - (j - i) + 1;
    if (best == 0 || s < best) best = s;
    if (best == 1) break;
  }
  return {n - 1 - i, best, dir_->char_at(n)};
}

std::optional<Converter::BoundaryMatch> Converter::longest_boundary_match(
    u64 i, u64 j) const {
  const u64 n = combined_.text_len();
  if (j <= i || j > n)
    throw OutOfRange("split position " + std::to_string(j) +
                     " outside (" + std::to_string(i) + ", " +
                     std::to_string(n) + "]");
  const RankInterval x = grid_->colex_range({i + 1, j});
  if (x.empty()) return std::nullopt;

  const auto probe = [&](u64 k) -> std::optional<u64> {
    ++stats_.split_queries;
    const TRange second = k > j ? TRange{j + 1, k} : TRange{};
    return grid_->range_min(x, grid_->lex_range(second));
  };

  const std::optional<u64> w0 = probe(j);
  if (!w0 || *w0 > j - 1) return std::nullopt;
  u64 lo = j, hi = n + 1, w_lo = *w0;
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    const std::optional<u64> w = probe(mid);
    if (w && *w <= j - 1) {
      lo = mid;
      w_lo = *w;
    } else {
      hi = mid;
    }
  }
  return BoundaryMatch{lo, w_lo - (j - i) + 1};
}

Lz77Parse convert(const RlzArchive& archive, u64 seed) {
  return Converter(archive, seed).run();
}

}  // namespace rlz2lz
