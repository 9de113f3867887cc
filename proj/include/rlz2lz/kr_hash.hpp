#pragma once

#include <compare>
#include <functional>
#include <string_view>

#include "rlz2lz/core.hpp"

namespace rlz2lz {

// Polynomial fingerprints modulo the Mersenne prime 2^61 - 1.  The hash of a
// string s is sum s[i] * base^(|s|-1-i); a random base makes any fixed pair of
// distinct equal-length strings collide with probability < n / 2^61.
struct HashConfig {
  static constexpr u64 kModulus = (1ULL << 61) - 1;
  u64 base = 0;

  static HashConfig from_seed(u64 seed);
};

// Fingerprints of arbitrary text substrings computed from the archive alone:
// prefix hashes of the reference at every position plus prefix hashes of the
// text at the combined-parse boundaries.  A position inside a tail phrase is
// resolved through the phrase's copy source, so no part of the tail is ever
// materialized.  Equal strings always compare equal; a collision can only
// make unequal strings look equal, and the optional verification hook checks
// exactly those final equality claims against extracted bytes.
class FingerprintIndex {
 public:
  FingerprintIndex(const RlzArchive& archive, const CombinedParse& combined,
                   u64 seed = 0);
  FingerprintIndex(const RlzArchive& archive, const CombinedParse& combined,
                   HashConfig config);

  // Fingerprint of T[1..k], k in [0, n].
  [[nodiscard]] u64 prefix_hash(u64 k) const;
  // Fingerprint of T[a..b]; empty ranges hash to 0.
  [[nodiscard]] u64 substring_hash(u64 a, u64 b) const;
  // Exact byte value, read from the reference through the phrase source.
  [[nodiscard]] unsigned char char_at(u64 k) const;

  // Longest d <= cap with T[x..x+d-1] == T[y..y+d-1].
  [[nodiscard]] u64 lce_forward(u64 x, u64 y, u64 cap) const;
  // Longest d <= cap with T[x-d+1..x] == T[y-d+1..y].
  [[nodiscard]] u64 lce_backward(u64 x, u64 y, u64 cap) const;

  // Longest common prefix of the suffixes starting at a and b; n+1 names the
  // empty suffix.
  [[nodiscard]] u64 lcp_suffixes(u64 a, u64 b) const;
  // Lexicographic order of the suffixes starting at a and b.
  [[nodiscard]] std::strong_ordering compare_suffixes(u64 a, u64 b) const;
  // Order of the two substrings when both are read right to left.
  [[nodiscard]] std::strong_ordering compare_colex(TRange x, TRange y) const;

  [[nodiscard]] u64 pow_base(u64 e) const;
  // Fingerprint of the concatenation xy from h(x), h(y) and |y|.
  [[nodiscard]] u64 combine(u64 hx, u64 hy, u64 len_y) const;

  [[nodiscard]] u64 text_len() const noexcept { return n_; }
  [[nodiscard]] const HashConfig& config() const noexcept { return config_; }

  // Byte-level recheck of equality claims; extract(a, b) must return T[a..b].
  void enable_verification(std::function<std::string(u64, u64)> extract);
  [[nodiscard]] u64 collision_count() const noexcept { return collisions_; }

  [[nodiscard]] u64 heap_words() const noexcept;

 private:
  [[nodiscard]] u64 lce_dir_(u64 x, u64 y, u64 cap, bool forward) const;
  [[nodiscard]] u64 tail_phrase_(u64 k) const;

  const CombinedParse* combined_;
  std::string_view ref_;  // borrowed from the archive, like combined_
  HashConfig config_;
  u64 n_ = 0;
  std::vector<u64> rp_;     // prefix hashes of the reference, rp_[k] = h(R[1..k])
  std::vector<u64> bp_;     // prefix hashes of T at combined phrase ends
  std::vector<u64> pow2k_;  // base^(2^k), fallback for oversized exponents
  // base^e for e <= n in one multiplication: low bits from pow_lo_, the rest
  // from pow_hi_; both tables are O(sqrt n) entries.
  std::vector<u64> pow_lo_;
  std::vector<u64> pow_hi_;
  u64 pow_bits_ = 0;
  u64 pow_split_ = 0;
  std::function<std::string(u64, u64)> extract_;
  mutable u64 phrase_memo_[2] = {0, 0};
  mutable u64 collisions_ = 0;
};

}  // namespace rlz2lz
