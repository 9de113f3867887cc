#include "rlz2lz/kr_hash.hpp"

#include <algorithm>
#include <bit>

namespace rlz2lz {

namespace {

constexpr u64 P = HashConfig::kModulus;

inline u64 mulmod(u64 a, u64 b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  u64 s = static_cast<u64>(z & P) + static_cast<u64>(z >> 61);
  s = (s & P) + (s >> 61);
  return s >= P ? s - P : s;
}

inline u64 addmod(u64 a, u64 b) {
  u64 s = a + b;
  return s >= P ? s - P : s;
}

inline u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + P - b; }

inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

HashConfig HashConfig::from_seed(u64 seed) {
  HashConfig c;
  c.base = 2 + splitmix64(seed) % (kModulus - 3);
  return c;
}

FingerprintIndex::FingerprintIndex(const RlzArchive& archive,
                                   const CombinedParse& combined, u64 seed)
    : FingerprintIndex(archive, combined, HashConfig::from_seed(seed)) {}

FingerprintIndex::FingerprintIndex(const RlzArchive& archive,
                                   const CombinedParse& combined,
                                   HashConfig config)
    : combined_(&combined),
      ref_(archive.reference),
      config_(config),
      n_(combined.text_len()) {
  pow2k_.resize(64);
  pow2k_[0] = config_.base;
  for (int k = 1; k < 64; ++k) pow2k_[k] = mulmod(pow2k_[k - 1], pow2k_[k - 1]);

  pow_bits_ = std::bit_width(n_);
  pow_split_ = (pow_bits_ + 1) / 2;
  pow_lo_.resize(u64{1} << pow_split_);
  pow_hi_.resize((u64{1} << (pow_bits_ - pow_split_)) + 1);
  pow_lo_[0] = 1;
  for (u64 k = 1; k < pow_lo_.size(); ++k)
    pow_lo_[k] = mulmod(pow_lo_[k - 1], config_.base);
  const u64 stride = mulmod(pow_lo_.back(), config_.base);
  pow_hi_[0] = 1;
  for (u64 k = 1; k < pow_hi_.size(); ++k)
    pow_hi_[k] = mulmod(pow_hi_[k - 1], stride);

  const std::string& ref = archive.reference;
  rp_.resize(ref.size() + 1);
  rp_[0] = 0;
  for (u64 k = 1; k <= ref.size(); ++k)
    rp_[k] = addmod(mulmod(rp_[k - 1], config_.base),
                    static_cast<unsigned char>(ref[k - 1]) % P);

  const u64 p = combined.phrase_count();
  bp_.resize(p);
  u64 prev = 0;
  for (u64 idx = 0; idx < p; ++idx) {
    const u64 end = combined.end_of(idx);
    if (!combined.is_tail_phrase(idx)) {
      bp_[idx] = rp_[end];
    } else {
      const u64 len = end - combined.start_of(idx) + 1;
      const u64 src = combined.src_of(idx);
      bp_[idx] = addmod(mulmod(submod(prev, rp_[src - 1]), pow_base(len)),
                        rp_[src - 1 + len]);
    }
    prev = bp_[idx];
  }
}

u64 FingerprintIndex::pow_base(u64 e) const {
  if ((e >> pow_bits_) == 0)
    return mulmod(pow_hi_[e >> pow_split_],
                  pow_lo_[e & ((u64{1} << pow_split_) - 1)]);
  u64 r = 1;
  for (int k = 0; e != 0; e >>= 1, ++k)
    if (e & 1) r = mulmod(r, pow2k_[k]);
  return r;
}

u64 FingerprintIndex::combine(u64 hx, u64 hy, u64 len_y) const {
  return addmod(mulmod(hx, pow_base(len_y)), hy);
}

// Phrase covering tail position k, with a two-entry memo: fingerprint
// probes alternate between two nearby regions of the text, so consecutive
// lookups land in the same pair of phrases almost every time.
u64 FingerprintIndex::tail_phrase_(u64 k) const {
  for (u64& memo : phrase_memo_) {
    const u64 idx = memo;
    if (combined_->start_of(idx) <= k && k <= combined_->end_of(idx)) {
      if (&memo != &phrase_memo_[0]) std::swap(phrase_memo_[0], phrase_memo_[1]);
      return idx;
    }
  }
  const u64 idx = combined_->phrase_at(k);
  phrase_memo_[1] = phrase_memo_[0];
  phrase_memo_[0] = idx;
  return idx;
}

u64 FingerprintIndex::prefix_hash(u64 k) const {
  if (k > n_) throw OutOfRange("prefix_hash past the end of the text");
  if (k <= combined_->ref_len) return rp_[k];
  const u64 idx = tail_phrase_(k);
  if (combined_->end_of(idx) == k) return bp_[idx];
  const u64 off = k - combined_->start_of(idx) + 1;
  const u64 src = combined_->src_of(idx);
  return addmod(mulmod(submod(bp_[idx - 1], rp_[src - 1]), pow_base(off)),
                rp_[src - 1 + off]);
}

u64 FingerprintIndex::substring_hash(u64 a, u64 b) const {
  if (a > b) return 0;
  if (a < 1 || b > n_) throw OutOfRange("substring_hash outside the text");
  return submod(prefix_hash(b), mulmod(prefix_hash(a - 1), pow_base(b - a + 1)));
}

unsigned char FingerprintIndex::char_at(u64 k) const {
  if (k < 1 || k > n_) throw OutOfRange("char_at outside the text");
  if (k <= combined_->ref_len) return static_cast<unsigned char>(ref_[k - 1]);
  const u64 idx = tail_phrase_(k);
  const u64 off = k - combined_->start_of(idx);
  return static_cast<unsigned char>(ref_[combined_->src_of(idx) - 1 + off]);
}

u64 FingerprintIndex::lce_dir_(u64 x, u64 y, u64 cap, bool forward) const {
  if (forward) {
    if (x > n_ || y > n_) return 0;
    cap = std::min(cap, n_ + 1 - std::max(x, y));
  } else {
    cap = std::min({cap, x, y});
  }
  if (cap == 0) return 0;
  if (x == y) return cap;

  const u64 hx0 = forward ? prefix_hash(x - 1) : prefix_hash(x);
  const u64 hy0 = forward ? prefix_hash(y - 1) : prefix_hash(y);
  auto eq = [&](u64 d) {
    if (forward) {
      const u64 pw = pow_base(d);
      return submod(prefix_hash(x + d - 1), mulmod(hx0, pw)) ==
             submod(prefix_hash(y + d - 1), mulmod(hy0, pw));
    }
    const u64 pw = pow_base(d);
    return submod(hx0, mulmod(prefix_hash(x - d), pw)) ==
           submod(hy0, mulmod(prefix_hash(y - d), pw));
  };

  if (!eq(1)) return 0;  // single characters hash exactly
  u64 good = 1;
  u64 bad = 0;
  for (u64 step = 1;; step <<= 1) {
    const u64 next = good + step;
    if (next > cap) {
      bad = cap + 1;
      break;
    }
    if (eq(next)) {
      good = next;
    } else {
      bad = next;
      break;
    }
  }
  while (bad - good > 1) {
    const u64 mid = good + (bad - good) / 2;
    if (eq(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }

  if (extract_ && good > 1) {
    const std::string sx = forward ? extract_(x, x + good - 1)
                                   : extract_(x - good + 1, x);
    const std::string sy = forward ? extract_(y, y + good - 1)
                                   : extract_(y - good + 1, y);
    if (sx != sy) {
      ++collisions_;
      u64 d = 0;
      if (forward) {
        while (d < good && sx[d] == sy[d]) ++d;
      } else {
        while (d < good && sx[good - 1 - d] == sy[good - 1 - d]) ++d;
      }
      return d;
    }
  }
  return good;
}

u64 FingerprintIndex::lce_forward(u64 x, u64 y, u64 cap) const {
  if (x < 1 || y < 1) throw OutOfRange("lce_forward before the text");
  return lce_dir_(x, y, cap, true);
}

u64 FingerprintIndex::lce_backward(u64 x, u64 y, u64 cap) const {
  if (x > n_ || y > n_) throw OutOfRange("lce_backward past the end");
  return lce_dir_(x, y, cap, false);
}

u64 FingerprintIndex::lcp_suffixes(u64 a, u64 b) const {
  if (a < 1 || a > n_ + 1 || b < 1 || b > n_ + 1)
    throw OutOfRange("suffix name outside [1, n+1]");
  if (a > n_ || b > n_) return 0;
  return lce_dir_(a, b, n_, true);
}

std::strong_ordering FingerprintIndex::compare_suffixes(u64 a, u64 b) const {
  if (a < 1 || a > n_ + 1 || b < 1 || b > n_ + 1)
    throw OutOfRange("suffix name outside [1, n+1]");
  if (a == b) return std::strong_ordering::equal;
  const u64 la = n_ + 1 - a;
  const u64 lb = n_ + 1 - b;
  const u64 d = lcp_suffixes(a, b);
  if (d == la || d == lb) return la <=> lb;  // distinct suffix lengths
  return char_at(a + d) <=> char_at(b + d);
}

std::strong_ordering FingerprintIndex::compare_colex(TRange x, TRange y) const {
  const u64 lx = x.len();
  const u64 ly = y.len();
  const u64 d =
      (lx != 0 && ly != 0) ? lce_backward(x.end, y.end, std::min(lx, ly)) : 0;
  if (d == lx || d == ly) return lx <=> ly;
  return char_at(x.end - d) <=> char_at(y.end - d);
}

void FingerprintIndex::enable_verification(
    std::function<std::string(u64, u64)> extract) {
  extract_ = std::move(extract);
}

u64 FingerprintIndex::heap_words() const noexcept {
  return rp_.size() + bp_.size() + pow2k_.size() + pow_lo_.size() +
         pow_hi_.size();
}

}  // namespace rlz2lz
