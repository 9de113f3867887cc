#include "rlz2lz/boundary_index.hpp"

#include <algorithm>
#include <limits>

namespace rlz2lz {

namespace {

constexpr u32 kNone32 = std::numeric_limits<u32>::max();
using i64 = std::int64_t;

// First rank in [0, p] whose item classifies >= threshold against the
// pattern, where classification is -1 below the pattern's block, 0 inside it
// and +1 above.  Items are sorted, so the classification is non-decreasing.
// The precomputed bisection-tree lcp arrays let most steps reuse the
// agreement carried on the anchor side; fingerprint comparisons happen only
// when the midpoint ties with that agreement.
template <class Ops>
u64 ordered_bound(u64 p, const std::vector<u32>& llcp,
                  const std::vector<u32>& rlcp, const Ops& ops, int threshold) {
  i64 lo = -1;
  i64 hi = static_cast<i64>(p);
  u64 l = 0;
  u64 r = 0;
  while (hi - lo > 1) {
    const i64 mid = (lo + hi) / 2;
    bool go_right;
    u64 d;
    if (lo >= 0 && l >= r) {
      const u64 e = llcp[mid];
      if (e > l) {  // mid agrees with the left anchor past its divergence
        go_right = false;
        d = l;
      } else if (e < l) {  // mid leaves the pattern's prefix early: above it
        go_right = true;
        d = e;
      } else {
        d = ops.extend(mid, l);
        go_right = ops.classify(mid, d) >= threshold;
      }
    } else if (hi < static_cast<i64>(p)) {
      const u64 e = rlcp[mid];
      if (e > r) {
        go_right = true;
        d = r;
      } else if (e < r) {
        go_right = false;
        d = e;
      } else {
        d = ops.extend(mid, r);
        go_right = ops.classify(mid, d) >= threshold;
      }
    } else {
      d = ops.extend(mid, 0);
      go_right = ops.classify(mid, d) >= threshold;
    }
    if (go_right) {
      hi = mid;
      r = d;
    } else {
      lo = mid;
      l = d;
    }
  }
  return static_cast<u64>(hi);
}

}  // namespace

BoundaryIndex::BoundaryIndex(const CombinedParse& combined,
                             const FingerprintIndex& fp)
    : combined_(&combined), fp_(&fp) {
  const u64 p = combined.phrase_count();
  xid_.resize(p);
  yid_.resize(p);
  y_of_.resize(p);
  for (u64 i = 0; i < p; ++i) xid_[i] = yid_[i] = static_cast<u32>(i);

  std::sort(xid_.begin(), xid_.end(), [&](u32 a, u32 b) {
    return fp.compare_colex(TRange{1, combined.end_of(a)},
                            TRange{1, combined.end_of(b)}) < 0;
  });
  std::sort(yid_.begin(), yid_.end(), [&](u32 a, u32 b) {
    return fp.compare_suffixes(combined.end_of(a) + 1,
                               combined.end_of(b) + 1) < 0;
  });
  for (u64 rk = 0; rk < p; ++rk) y_of_[yid_[rk]] = static_cast<u32>(rk);

  if (p == 0) return;

  // Agreement between adjacent items, then min-composed llcp/rlcp values for
  // every midpoint the search can visit.
  auto fill = [](auto&& self, const std::vector<u32>& adj, std::vector<u32>& L,
                 std::vector<u32>& R, i64 a, i64 b, u64 p_) -> u32 {
    if (b - a == 1)
      return (a >= 0 && b < static_cast<i64>(p_)) ? adj[a] : 0;
    const i64 mid = (a + b) / 2;
    const u32 lv = self(self, adj, L, R, a, mid, p_);
    const u32 rv = self(self, adj, L, R, mid, b, p_);
    L[mid] = lv;
    R[mid] = rv;
    return std::min(lv, rv);
  };
  {
    std::vector<u32> adj(p > 1 ? p - 1 : 0);
    for (u64 rk = 0; rk + 1 < p; ++rk) {
      const u64 ea = combined.end_of(xid_[rk]);
      const u64 eb = combined.end_of(xid_[rk + 1]);
      adj[rk] = static_cast<u32>(fp.lce_backward(ea, eb, std::min(ea, eb)));
    }
    llcp_x_.assign(p, 0);
    rlcp_x_.assign(p, 0);
    fill(fill, adj, llcp_x_, rlcp_x_, -1, static_cast<i64>(p), p);

    const u64 n = combined.text_len();
    for (u64 rk = 0; rk + 1 < p; ++rk) {
      const u64 sa = combined.end_of(yid_[rk]) + 1;
      const u64 sb = combined.end_of(yid_[rk + 1]) + 1;
      adj[rk] = static_cast<u32>(
          sa > n || sb > n ? 0 : fp.lce_forward(sa, sb, n + 1 - std::max(sa, sb)));
    }
    llcp_y_.assign(p, 0);
    rlcp_y_.assign(p, 0);
    fill(fill, adj, llcp_y_, rlcp_y_, -1, static_cast<i64>(p), p);
  }

  // Grid: recursive halving over colex ranks; each node keeps its boundaries
  // y-sorted under a minimum tree keyed by boundary id (ids grow with ends).
  u64 total = 0;
  {
    std::vector<std::pair<u64, u64>> stack{{0, p}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      total += 2 * (b - a);
      if (b - a > 1) {
        const u64 mid = a + (b - a) / 2;
        stack.push_back({a, mid});
        stack.push_back({mid, b});
      }
    }
  }
  node_begin_.assign(2 * p - 1, 0);
  data_.assign(total, 0);
  std::vector<u32> scratch;
  u64 next = 0;
  build_grid_(0, 0, p, scratch, next);
}

void BoundaryIndex::build_grid_(u64 v, u64 a, u64 b, std::vector<u32>& scratch,
                                u64& next) {
  const u64 sz = b - a;
  node_begin_[v] = static_cast<u32>(next);
  next += 2 * sz;
  u32* d = data_.data() + node_begin_[v];
  if (sz == 1) {
    d[0] = d[1] = xid_[a];
    return;
  }
  const u64 mid = a + sz / 2;
  const u64 left = v + 1;
  const u64 right = v + 2 * (sz / 2);
  build_grid_(left, a, mid, scratch, next);
  build_grid_(right, mid, b, scratch, next);
  const u64 szl = mid - a;
  const u64 szr = b - mid;
  const u32* dl = data_.data() + node_begin_[left];
  const u32* dr = data_.data() + node_begin_[right];
  std::merge(dl + szl, dl + 2 * szl, dr + szr, dr + 2 * szr, d + sz,
             [&](u32 x, u32 y) { return y_of_[x] < y_of_[y]; });
  for (u64 i = sz; i-- > 1;) d[i] = std::min(d[2 * i], d[2 * i + 1]);
}

u64 BoundaryIndex::bound_colex_(TRange pat, int threshold) const {
  struct Ops {
    const BoundaryIndex* bi;
    TRange pat;
    u64 m;
    u64 end_of(i64 rank) const {
      return bi->combined_->end_of(bi->xid_[static_cast<u64>(rank)]);
    }
    u64 extend(i64 rank, u64 base) const {
      const u64 e = end_of(rank);
      const u64 cap = std::min(m, e);
      if (base >= cap) return base;
      return base + bi->fp_->lce_backward(pat.end - base, e - base, cap - base);
    }
    int classify(i64 rank, u64 d) const {
      if (d == m) return 0;
      const u64 e = end_of(rank);
      if (d == e) return -1;
      return bi->fp_->char_at(e - d) < bi->fp_->char_at(pat.end - d) ? -1 : 1;
    }
  };
  return ordered_bound(phrase_count(), llcp_x_, rlcp_x_,
                       Ops{this, pat, pat.len()}, threshold);
}

u64 BoundaryIndex::bound_lex_(TRange pat, int threshold) const {
  struct Ops {
    const BoundaryIndex* bi;
    TRange pat;
    u64 m;
    u64 n;
    u64 start_of(i64 rank) const {
      return bi->combined_->end_of(bi->yid_[static_cast<u64>(rank)]) + 1;
    }
    u64 extend(i64 rank, u64 base) const {
      const u64 s = start_of(rank);
      const u64 cap = std::min(m, n + 1 - s);
      if (base >= cap) return base;
      return base + bi->fp_->lce_forward(pat.begin + base, s + base, cap - base);
    }
    int classify(i64 rank, u64 d) const {
      if (d == m) return 0;
      const u64 s = start_of(rank);
      if (d == n + 1 - s) return -1;
      return bi->fp_->char_at(s + d) < bi->fp_->char_at(pat.begin + d) ? -1 : 1;
    }
  };
  return ordered_bound(phrase_count(), llcp_y_, rlcp_y_,
                       Ops{this, pat, pat.len(), combined_->text_len()},
                       threshold);
}

RankInterval BoundaryIndex::colex_range(TRange first) const {
  if (first.empty()) throw OutOfRange("empty first part in a boundary query");
  if (phrase_count() == 0) return {};
  const u64 lo = bound_colex_(first, 0);
  const u64 hi = bound_colex_(first, 1);
  if (hi <= lo) return {};
  return {lo + 1, hi};
}

RankInterval BoundaryIndex::lex_range(TRange second) const {
  const u64 p = phrase_count();
  if (second.empty()) return {1, p};
  if (p == 0) return {};
  const u64 lo = bound_lex_(second, 0);
  const u64 hi = bound_lex_(second, 1);
  if (hi <= lo) return {};
  return {lo + 1, hi};
}

void BoundaryIndex::grid_min_(u64 v, u64 a, u64 b, u64 xlo, u64 xhi, u64 ylo,
                              u64 yhi, u32& best) const {
  if (xhi <= a || b <= xlo) return;
  const u64 sz = b - a;
  if (xlo <= a && b <= xhi) {
    const u32* d = data_.data() + node_begin_[v];
    const u32* leaves = d + sz;
    const u32* it_lo = std::lower_bound(
        leaves, leaves + sz, ylo,
        [&](u32 id, u64 y) { return y_of_[id] < y; });
    const u32* it_hi = std::lower_bound(
        leaves, leaves + sz, yhi,
        [&](u32 id, u64 y) { return y_of_[id] < y; });
    u64 l = static_cast<u64>(it_lo - leaves) + sz;
    u64 r = static_cast<u64>(it_hi - leaves) + sz;
    for (; l < r; l >>= 1, r >>= 1) {
      if (l & 1) best = std::min(best, d[l++]);
      if (r & 1) best = std::min(best, d[--r]);
    }
    return;
  }
  const u64 mid = a + sz / 2;
  grid_min_(v + 1, a, mid, xlo, xhi, ylo, yhi, best);
  grid_min_(v + 2 * (sz / 2), mid, b, xlo, xhi, ylo, yhi, best);
}

std::optional<u64> BoundaryIndex::range_min(RankInterval x,
                                            RankInterval y) const {
  if (x.empty() || y.empty() || phrase_count() == 0) return std::nullopt;
  u32 best = kNone32;
  grid_min_(0, 0, phrase_count(), x.lo - 1, x.hi, y.lo - 1, y.hi, best);
  if (best == kNone32) return std::nullopt;
  return combined_->end_of(best);
}

std::optional<u64> BoundaryIndex::split_leftmost(const SplitQuery& q) const {
  const auto w = range_min(colex_range(q.first), lex_range(q.second));
  if (!w) return std::nullopt;
  return *w - q.first.len() + 1;
}

u64 BoundaryIndex::heap_words() const noexcept {
  const u64 u32s = xid_.size() + yid_.size() + y_of_.size() + llcp_x_.size() +
                   rlcp_x_.size() + llcp_y_.size() + rlcp_y_.size() +
                   node_begin_.size() + data_.size();
  return (u32s + 1) / 2;
}

}  // namespace rlz2lz
